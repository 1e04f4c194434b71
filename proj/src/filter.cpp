#include <georag/index/filter.hpp>

#include <algorithm>

namespace georag::index {

bool MetadataFilter::is_empty() const {
    return !source_types && !min_year && !max_year && required_tags.empty() &&
           region_tags.empty();
}

bool MetadataFilter::matches(const corpus::ChunkMetadata& meta) const {
    if (source_types && !source_types->count(meta.source_type)) return false;

    if (min_year || max_year) {
        if (!meta.year) return false;
        if (min_year && *meta.year < *min_year) return false;
        if (max_year && *meta.year > *max_year) return false;
    }

    for (const auto& required : required_tags) {
        if (std::find(meta.tags.begin(), meta.tags.end(), required) == meta.tags.end()) {
            return false;
        }
    }

    if (!region_tags.empty()) {
        bool any = false;
        for (const auto& code : region_tags) {
            for (const auto& tag : meta.region_tags) {
                if (tag.code == code) {
                    any = true;
                    break;
                }
            }
            if (any) break;
        }
        if (!any) return false;
    }
    return true;
}

} // namespace georag::index
