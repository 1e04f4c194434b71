#include <georag/embed/provider.hpp>

#include <stdexcept>

namespace georag::embed {

EmbeddingVector embed_text(EmbeddingProvider& provider, const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("embed_text: text must be non-empty");
    }
    const std::string prefixed[] = {kEmbedPrefix + text};
    auto out = provider.embed_batch(prefixed);
    return std::move(out.front());
}

std::vector<EmbeddingVector> embed_texts(EmbeddingProvider& provider,
                                         std::span<const std::string> texts) {
    std::vector<std::string> prefixed;
    prefixed.reserve(texts.size());
    for (const auto& t : texts) prefixed.push_back(kEmbedPrefix + t);
    return provider.embed_batch(prefixed);
}

} // namespace georag::embed
