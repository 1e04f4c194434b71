#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include <georag/corpus/document.hpp>

namespace georag::corpus {

/// Loads a JSONL corpus: one document object per line, schema
///   {"id","title","text","source_type","year","region_tags":[..],
///    "centroid":{"lat":..,"lon":..},"tags":[..]}
/// year, region_tags, centroid, and tags are optional. Every document is
/// validated; failures throw ParseError naming the offending line, and a
/// duplicate id names both lines involved.
std::vector<Document> load_corpus(const std::filesystem::path& path);
std::vector<Document> load_corpus(std::istream& in, const std::string& source_name);

} // namespace georag::corpus
