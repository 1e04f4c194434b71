#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace georag::eval {

/// The fixed 40-word stopword list shipped with the evaluator.
std::span<const std::string_view> stopwords();

/// Evaluation normalization: lowercase, punctuation to spaces (keeping '.'
/// between digits so "6.5" survives), stopwords removed, whitespace
/// collapsed.
std::string normalize_text(std::string_view s);
std::vector<std::string> normalize_tokens(std::string_view s);

/// SQuAD-style answer tokens used by token_f1: lowercase, punctuation
/// stripped the same way, but only the articles {a, an, the} are removed.
std::vector<std::string> squad_tokens(std::string_view s);

} // namespace georag::eval
