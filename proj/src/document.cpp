#include <georag/corpus/document.hpp>

#include <cstring>

#include <georag/errors.hpp>
#include <georag/hashing.hpp>

namespace georag::corpus {

std::string to_string(SourceType t) {
    switch (t) {
    case SourceType::journal: return "journal";
    case SourceType::textbook: return "textbook";
    case SourceType::extension: return "extension";
    case SourceType::report: return "report";
    }
    return "report";
}

SourceType source_type_from_string(const std::string& s) {
    if (s == "journal") return SourceType::journal;
    if (s == "textbook") return SourceType::textbook;
    if (s == "extension") return SourceType::extension;
    if (s == "report") return SourceType::report;
    throw ParseError("unknown source_type \"" + s +
                     "\" (expected journal|textbook|extension|report)");
}

void validate_document(const Document& doc, size_t line) {
    auto fail = [line](const std::string& what) {
        std::string prefix = line ? "line " + std::to_string(line) + ": " : "";
        throw ParseError(prefix + what, line);
    };
    if (doc.id.empty()) fail("document id must be non-empty");
    if (doc.text.empty()) fail("document \"" + doc.id + "\" has empty text");
    if (doc.year && *doc.year < 1800) {
        fail("document \"" + doc.id + "\" has year " + std::to_string(*doc.year) +
             " (must be >= 1800)");
    }
}

namespace {

uint64_t mix(uint64_t h, std::string_view s) {
    h = fnv1a64(s, h);
    h = fnv1a64("\x1f", h); // field separator
    return h;
}

uint64_t mix(uint64_t h, double v) {
    uint64_t bits = 0;
    std::memcpy(&bits, &v, sizeof bits);
    return fnv1a64_bytes(&bits, sizeof bits, h);
}

} // namespace

uint64_t document_content_hash(const Document& doc) {
    uint64_t h = kFnvOffset;
    h = mix(h, doc.id);
    h = mix(h, doc.title);
    h = mix(h, doc.text);
    h = mix(h, to_string(doc.source_type));
    h = mix(h, doc.year ? std::to_string(*doc.year) : "-");
    for (const auto& tag : doc.region_tags) h = mix(h, tag.code);
    if (doc.centroid) {
        h = mix(h, doc.centroid->lat());
        h = mix(h, doc.centroid->lon());
    }
    for (const auto& tag : doc.tags) h = mix(h, tag);
    return h;
}

} // namespace georag::corpus
