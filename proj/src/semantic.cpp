#include <georag/eval/semantic.hpp>

#include <algorithm>

#include <georag/eval/normalize.hpp>

namespace georag::eval {

double bertscore_f1(std::string_view pred, std::string_view ref,
                    embed::EmbeddingProvider& provider) {
    const auto p_toks = normalize_tokens(pred);
    const auto r_toks = normalize_tokens(ref);
    if (p_toks.empty() || r_toks.empty()) return 0.0;

    auto embed_all = [&provider](const std::vector<std::string>& toks) {
        return provider.embed_batch(toks);
    };
    const auto p_vecs = embed_all(p_toks);
    const auto r_vecs = embed_all(r_toks);

    auto greedy_mean = [](const std::vector<embed::EmbeddingVector>& from,
                          const std::vector<embed::EmbeddingVector>& to) {
        double total = 0.0;
        for (const auto& f : from) {
            double best = -1.0;
            for (const auto& t : to) best = std::max(best, embed::cosine(f, t));
            total += std::clamp(best, 0.0, 1.0);
        }
        return total / static_cast<double>(from.size());
    };

    const double precision = greedy_mean(p_vecs, r_vecs);
    const double recall = greedy_mean(r_vecs, p_vecs);
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

double answer_relevance(std::string_view question, std::string_view answer,
                        embed::EmbeddingProvider& provider) {
    if (question.empty() || answer.empty()) return 0.0;
    const std::string inputs[] = {std::string(question), std::string(answer)};
    const auto vecs = provider.embed_batch(inputs);
    return std::clamp(embed::cosine(vecs[0], vecs[1]), 0.0, 1.0);
}

} // namespace georag::eval
