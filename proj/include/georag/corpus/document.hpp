#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <georag/geo/point.hpp>

namespace georag::corpus {

enum class SourceType { journal, textbook, extension, report };

std::string to_string(SourceType t);
SourceType source_type_from_string(const std::string& s);

/// One ingested document. `centroid` is optional: a document without geo
/// metadata is retrievable but scored at the configured maximum distance.
struct Document {
    std::string id;
    std::string title;
    std::string text;
    SourceType source_type = SourceType::report;
    std::optional<int> year;
    std::vector<geo::RegionTag> region_tags;
    std::optional<geo::GeoPoint> centroid;
    std::vector<std::string> tags;
};

/// Validates the per-document invariants (non-empty id/text, year >= 1800).
/// Throws ParseError with `line` attached when a rule fails.
void validate_document(const Document& doc, size_t line = 0);

/// Content fingerprint over every field; used by re-indexing to decide
/// whether a document changed.
uint64_t document_content_hash(const Document& doc);

/// A heading-delimited region of a document, in token indices.
struct Section {
    std::string heading;
    size_t start_token = 0;
    size_t end_token = 0; // exclusive
};

/// Metadata copied onto every chunk of a document, plus the enclosing
/// section heading.
struct ChunkMetadata {
    SourceType source_type = SourceType::report;
    std::optional<int> year;
    std::vector<geo::RegionTag> region_tags;
    std::optional<geo::GeoPoint> centroid;
    std::vector<std::string> tags;
    std::string heading;
};

/// The retrievable unit: a token window of one document.
struct Chunk {
    std::string chunk_id;    // "<document id>#<ordinal>"
    std::string document_id;
    std::string text;        // soft-prompt heading line + body tokens
    std::pair<size_t, size_t> token_span; // [start, end) in document tokens
    ChunkMetadata metadata;
};

} // namespace georag::corpus
