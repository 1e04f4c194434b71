#pragma once

#include <span>
#include <string>
#include <vector>

#include <georag/embed/embedding.hpp>

namespace georag::embed {

/// Prefix prepended to every string before embedding, matching the training
/// format the production embedding model expects.
inline constexpr const char* kEmbedPrefix = "text: ";

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    virtual const std::string& provider_id() const = 0;
    virtual size_t dim() const = 0;

    /// Embeds raw strings exactly as given (no prefixing). ith output
    /// corresponds to ith input.
    virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> inputs) = 0;
};

/// Embeds one text through a provider, applying the kEmbedPrefix convention.
/// Rejects empty text.
EmbeddingVector embed_text(EmbeddingProvider& provider, const std::string& text);

/// Batch form of embed_text; outputs align with inputs by index.
std::vector<EmbeddingVector> embed_texts(EmbeddingProvider& provider,
                                         std::span<const std::string> texts);

} // namespace georag::embed
