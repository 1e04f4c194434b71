#pragma once

#include <georag/embed/provider.hpp>

namespace georag::embed {

/// Deterministic offline embedder: signed feature hashing of lowercased word
/// unigrams and bigrams into `dim` buckets, L2-normalized. Identical input
/// text gives a bit-identical vector on every platform (FNV-1a hashing, no
/// locale dependence), and cosine between outputs tracks lexical overlap,
/// which is enough to exercise the retrieval stack without a network.
class HashEmbedder final : public EmbeddingProvider {
public:
    /// Throws std::invalid_argument when dim < 8.
    explicit HashEmbedder(size_t dim);

    const std::string& provider_id() const override { return provider_id_; }
    size_t dim() const override { return dim_; }
    std::vector<EmbeddingVector> embed_batch(std::span<const std::string> inputs) override;

    /// The embedding function itself; exposed for direct use in metrics.
    static EmbeddingVector hash_embed(std::string_view txt, size_t dim);

private:
    size_t dim_;
    std::string provider_id_;
};

} // namespace georag::embed
