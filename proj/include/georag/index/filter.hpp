#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <georag/corpus/document.hpp>

namespace georag::index {

/// Predicate over chunk metadata. An empty filter matches everything.
///   source_types : chunk's source type must be in the set
///   min/max_year : inclusive bounds; chunks without a year are excluded
///                  whenever a year bound is set
///   required_tags: every listed tag must be present on the chunk
///   region_tags  : at least one listed code must match a chunk region code
struct MetadataFilter {
    std::optional<std::set<corpus::SourceType>> source_types;
    std::optional<int> min_year;
    std::optional<int> max_year;
    std::vector<std::string> required_tags;
    std::vector<std::string> region_tags;

    bool matches(const corpus::ChunkMetadata& meta) const;
    bool is_empty() const;
};

} // namespace georag::index
