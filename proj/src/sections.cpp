#include <georag/corpus/sections.hpp>

#include <cctype>

#include <georag/corpus/tokenizer.hpp>

namespace georag::corpus {

namespace {

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

size_t count_tokens(std::string_view s) {
    size_t n = 0;
    bool in_tok = false;
    for (char c : s) {
        const bool ws = std::isspace(static_cast<unsigned char>(c));
        if (!ws && !in_tok) ++n;
        in_tok = !ws;
    }
    return n;
}

constexpr size_t kMaxHeadingTokens = 12;

/// "# Title" .. "###### Title"
bool markdown_heading(std::string_view line, std::string& heading) {
    size_t hashes = 0;
    while (hashes < line.size() && line[hashes] == '#') ++hashes;
    if (hashes == 0 || hashes > 6) return false;
    if (hashes >= line.size() || line[hashes] != ' ') return false;
    auto rest = trim(line.substr(hashes + 1));
    if (rest.empty()) return false;
    heading = std::string(rest);
    return true;
}

/// "1. Title", "2.3 Subsection", "4) Title" with a capitalized title.
bool numbered_heading(std::string_view line, std::string& heading) {
    size_t i = 0;
    if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i]))) return false;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    while (i + 1 < line.size() && line[i] == '.' &&
           std::isdigit(static_cast<unsigned char>(line[i + 1]))) {
        ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    }
    if (i < line.size() && (line[i] == '.' || line[i] == ')')) ++i;
    if (i >= line.size() || line[i] != ' ') return false;
    auto rest = trim(line.substr(i));
    if (rest.empty() || !std::isupper(static_cast<unsigned char>(rest[0]))) return false;
    if (count_tokens(line) > kMaxHeadingTokens) return false;
    heading = std::string(trim(line));
    return true;
}

/// Short line whose letters are all uppercase, e.g. "SOIL MANAGEMENT".
bool caps_heading(std::string_view line, std::string& heading) {
    size_t alpha = 0;
    for (char c : line) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (std::islower(static_cast<unsigned char>(c))) return false;
            ++alpha;
        }
    }
    if (alpha < 2) return false;
    const size_t toks = count_tokens(line);
    if (toks == 0 || toks > kMaxHeadingTokens) return false;
    heading = std::string(trim(line));
    return true;
}

bool heading_line(std::string_view line, std::string& heading) {
    auto t = trim(line);
    if (t.empty()) return false;
    return markdown_heading(t, heading) || numbered_heading(t, heading) ||
           caps_heading(t, heading);
}

} // namespace

std::vector<Section> detect_sections(std::string_view doc_text) {
    std::vector<Section> sections;
    size_t token_pos = 0;
    Section current{"", 0, 0};
    bool current_open = false;

    size_t line_start = 0;
    while (line_start <= doc_text.size()) {
        size_t line_end = doc_text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = doc_text.size();
        const auto line = doc_text.substr(line_start, line_end - line_start);
        const size_t line_tokens = count_tokens(line);

        std::string heading;
        if (line_tokens > 0 && heading_line(line, heading)) {
            if (current_open && token_pos > current.start_token) {
                current.end_token = token_pos;
                sections.push_back(current);
            }
            current = Section{heading, token_pos, 0};
            current_open = true;
        } else if (line_tokens > 0 && !current_open) {
            current = Section{"", token_pos, 0};
            current_open = true;
        }
        token_pos += line_tokens;

        if (line_end == doc_text.size()) break;
        line_start = line_end + 1;
    }

    if (current_open) {
        current.end_token = token_pos;
        if (current.end_token > current.start_token) sections.push_back(current);
    }
    if (sections.empty()) {
        sections.push_back(Section{"", 0, token_pos});
    }
    return sections;
}

} // namespace georag::corpus
