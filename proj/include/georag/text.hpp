#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace georag::text {

/// Lowercases ASCII letters in place-copy.
std::string to_lower(std::string_view s);

/// Replaces punctuation with spaces, keeping '.' when it sits between two
/// digits so decimal values like "6.5" survive.
std::string strip_punctuation(std::string_view s);

/// Lowercased, punctuation-stripped whitespace tokens. No stopword removal.
std::vector<std::string> simple_tokens(std::string_view s);

/// Splits text into sentences. Boundaries are '.', '!', '?' followed by
/// whitespace or end-of-text (a '.' inside a number is not a boundary), and
/// newlines. Sentences are trimmed; empty pieces are dropped.
std::vector<std::string> sentence_split(std::string_view s);

} // namespace georag::text
