#pragma once

#include <string_view>

namespace georag::eval {

/// 1 when normalize_text(pred) == normalize_text(ref), else 0.
double exact_match(std::string_view pred, std::string_view ref);

/// SQuAD-style token F1: harmonic mean of multiset precision/recall over
/// squad_tokens(). Both sides empty -> 1, exactly one empty -> 0.
double token_f1(std::string_view pred, std::string_view ref);

/// BLEU-4 over whitespace tokens of the inputs as given (callers normalize
/// first when they want the evaluation-protocol behavior). Geometric mean of
/// modified 1..4-gram precisions with epsilon smoothing
///   p_n = (clipped + 1e-9) / (count_n + 1e-9),  p_n = 1e-9 when count_n = 0
/// and brevity penalty exp(1 - |ref|/|pred|) when the prediction is shorter.
/// Both sides empty -> 1, exactly one empty -> 0.
double bleu4(std::string_view pred, std::string_view ref);

/// ROUGE-L: longest-common-subsequence F-measure (beta = 1) over whitespace
/// tokens. Same empty-input rules as bleu4.
double rouge_l(std::string_view pred, std::string_view ref);

} // namespace georag::eval
