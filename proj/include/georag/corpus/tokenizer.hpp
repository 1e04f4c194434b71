#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace georag::corpus {

/// Whitespace tokenization. Deterministic; joining the result with single
/// spaces reproduces the whitespace-normalized input.
std::vector<std::string> tokenize(std::string_view text);

/// Collapses runs of whitespace to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view text);

} // namespace georag::corpus
