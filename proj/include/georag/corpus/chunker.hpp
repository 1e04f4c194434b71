#pragma once

#include <vector>

#include <georag/corpus/document.hpp>

namespace georag::corpus {

struct ChunkingConfig {
    size_t chunk_size = 300; // token budget per chunk body
    size_t overlap = 50;     // tokens shared by consecutive chunks
};

/// Splits a document into overlapping token windows. Chunk starts advance by
/// chunk_size - overlap; every token index lands in at least one chunk and
/// consecutive chunks of a long document share exactly `overlap` indices.
/// Each chunk inherits the enclosing section's heading (section of its start
/// token) and carries it as a leading "Heading: <...>" line when non-empty;
/// that soft-prompt line does not count against the token budget. The final
/// chunk may be shorter than chunk_size.
///
/// Throws std::invalid_argument when chunk_size <= overlap.
std::vector<Chunk> chunk_document(const Document& doc, const ChunkingConfig& cfg = {});

} // namespace georag::corpus
