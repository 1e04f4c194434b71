#include <georag/embed/hash_embedder.hpp>

#include <cmath>
#include <stdexcept>

#include <georag/corpus/tokenizer.hpp>
#include <georag/hashing.hpp>
#include <georag/text.hpp>

namespace georag::embed {

HashEmbedder::HashEmbedder(size_t dim) : dim_(dim) {
    if (dim < 8) {
        throw std::invalid_argument("hash embedder dim must be >= 8, got " +
                                    std::to_string(dim));
    }
    provider_id_ = "hash-v1-" + std::to_string(dim);
}

EmbeddingVector HashEmbedder::hash_embed(std::string_view txt, size_t dim) {
    std::vector<double> values(dim, 0.0);

    std::vector<std::string> tokens = corpus::tokenize(txt);
    for (auto& t : tokens) t = text::to_lower(t);

    auto bump = [&](const std::string& feature) {
        const uint64_t h = fnv1a64(feature);
        const double sign = (h >> 63) ? -1.0 : 1.0;
        values[h % dim] += sign;
    };
    for (const auto& t : tokens) bump("u:" + t);
    for (size_t i = 0; i + 1 < tokens.size(); ++i) bump("b:" + tokens[i] + " " + tokens[i + 1]);

    double norm = 0.0;
    for (double v : values) norm += v * v;
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (double& v : values) v /= norm;
    }
    return EmbeddingVector{std::move(values), "hash-v1-" + std::to_string(dim)};
}

std::vector<EmbeddingVector> HashEmbedder::embed_batch(std::span<const std::string> inputs) {
    std::vector<EmbeddingVector> out;
    out.reserve(inputs.size());
    for (const auto& s : inputs) out.push_back(hash_embed(s, dim_));
    return out;
}

} // namespace georag::embed
