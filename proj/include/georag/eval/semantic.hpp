#pragma once

#include <string_view>

#include <georag/embed/provider.hpp>

namespace georag::eval {

/// Greedy token-matching score over provider embeddings of normalize_tokens:
/// each prediction token pairs with its max-cosine reference token and vice
/// versa (per-token similarity clamped to [0,1]); F1 of the two greedy means.
/// Either side empty -> 0.
double bertscore_f1(std::string_view pred, std::string_view ref,
                    embed::EmbeddingProvider& provider);

/// Cosine between whole-string embeddings of question and answer, clamped to
/// [0, 1]. Either side empty -> 0.
double answer_relevance(std::string_view question, std::string_view answer,
                        embed::EmbeddingProvider& provider);

} // namespace georag::eval
