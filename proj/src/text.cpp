#include <georag/text.hpp>

#include <cctype>

namespace georag::text {

namespace {

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

} // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string strip_punctuation(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isalnum(static_cast<unsigned char>(c)) ||
            std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        } else if (c == '.' && i > 0 && i + 1 < s.size() && is_digit(s[i - 1]) &&
                   is_digit(s[i + 1])) {
            out.push_back(c); // keep decimals like "6.5"
        } else {
            out.push_back(' ');
        }
    }
    return out;
}

std::vector<std::string> simple_tokens(std::string_view s) {
    const std::string cleaned = strip_punctuation(to_lower(s));
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < cleaned.size()) {
        while (i < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[i]))) ++i;
        size_t start = i;
        while (i < cleaned.size() && !std::isspace(static_cast<unsigned char>(cleaned[i]))) ++i;
        if (i > start) tokens.emplace_back(cleaned.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> sentence_split(std::string_view s) {
    std::vector<std::string> sentences;
    std::string current;
    auto flush = [&] {
        size_t b = current.find_first_not_of(" \t\r");
        size_t e = current.find_last_not_of(" \t\r");
        if (b != std::string::npos) sentences.push_back(current.substr(b, e - b + 1));
        current.clear();
    };
    for (size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '\n') {
            flush();
            continue;
        }
        current.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            const bool at_end = i + 1 == s.size();
            const bool before_space =
                !at_end && std::isspace(static_cast<unsigned char>(s[i + 1]));
            // a '.' with a digit right after it is a decimal point, not an end
            if (at_end || before_space) flush();
        }
    }
    flush();
    return sentences;
}

} // namespace georag::text
