#pragma once

#include <string_view>
#include <vector>

#include <georag/corpus/document.hpp>

namespace georag::corpus {

/// Detects section boundaries from typographic cues: markdown '#' headings,
/// ALL-CAPS lines, and numbered "1. Title" lines. Always returns at least one
/// section; a document with no detectable headings yields a single section
/// with an empty heading spanning all tokens. Sections are expressed in the
/// token indices produced by tokenize() and cover the whole document.
std::vector<Section> detect_sections(std::string_view doc_text);

} // namespace georag::corpus
