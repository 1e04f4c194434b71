#include <georag/eval/normalize.hpp>

#include <algorithm>
#include <array>

#include <georag/text.hpp>

namespace georag::eval {

namespace {

// 40 common English words; fixed so normalization is identical everywhere.
constexpr std::array<std::string_view, 40> kStopwords = {
    "the",     "a",     "an",      "and",    "or",     "but",    "if",     "then",
    "else",    "when",  "at",      "by",     "for",    "with",   "about",  "against",
    "between", "into",  "through", "during", "before", "after",  "above",  "below",
    "to",      "from",  "up",      "down",   "in",     "out",    "on",     "off",
    "over",    "under", "is",      "are",    "was",    "were",   "be",     "of",
};

bool is_stopword(const std::string& tok) {
    return std::find(kStopwords.begin(), kStopwords.end(), tok) != kStopwords.end();
}

bool is_article(const std::string& tok) {
    return tok == "a" || tok == "an" || tok == "the";
}

} // namespace

std::span<const std::string_view> stopwords() {
    return {kStopwords.data(), kStopwords.size()};
}

std::vector<std::string> normalize_tokens(std::string_view s) {
    std::vector<std::string> out;
    for (auto& tok : text::simple_tokens(s)) {
        if (!is_stopword(tok)) out.push_back(std::move(tok));
    }
    return out;
}

std::string normalize_text(std::string_view s) {
    std::string out;
    for (const auto& tok : normalize_tokens(s)) {
        if (!out.empty()) out.push_back(' ');
        out += tok;
    }
    return out;
}

std::vector<std::string> squad_tokens(std::string_view s) {
    std::vector<std::string> out;
    for (auto& tok : text::simple_tokens(s)) {
        if (!is_article(tok)) out.push_back(std::move(tok));
    }
    return out;
}

} // namespace georag::eval
