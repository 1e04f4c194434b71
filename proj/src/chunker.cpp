#include <georag/corpus/chunker.hpp>

#include <stdexcept>

#include <georag/corpus/sections.hpp>
#include <georag/corpus/tokenizer.hpp>

namespace georag::corpus {

namespace {

const std::string& heading_at(const std::vector<Section>& sections, size_t token_index) {
    // sections are sorted and cover the token range; take the last one
    // starting at or before the index
    const Section* best = &sections.front();
    for (const auto& s : sections) {
        if (s.start_token <= token_index) best = &s;
        else break;
    }
    return best->heading;
}

} // namespace

std::vector<Chunk> chunk_document(const Document& doc, const ChunkingConfig& cfg) {
    if (cfg.chunk_size == 0 || cfg.chunk_size <= cfg.overlap) {
        throw std::invalid_argument("chunk_size (" + std::to_string(cfg.chunk_size) +
                                    ") must exceed overlap (" + std::to_string(cfg.overlap) +
                                    ")");
    }

    const auto tokens = tokenize(doc.text);
    const size_t n = tokens.size();
    std::vector<Chunk> chunks;
    if (n == 0) return chunks;

    const auto sections = detect_sections(doc.text);
    const size_t step = cfg.chunk_size - cfg.overlap;

    size_t ordinal = 0;
    for (size_t start = 0;; start += step, ++ordinal) {
        const size_t end = std::min(start + cfg.chunk_size, n);

        Chunk chunk;
        chunk.chunk_id = doc.id + "#" + std::to_string(ordinal);
        chunk.document_id = doc.id;
        chunk.token_span = {start, end};
        chunk.metadata = ChunkMetadata{doc.source_type, doc.year,     doc.region_tags,
                                       doc.centroid,    doc.tags,     heading_at(sections, start)};

        std::string body;
        for (size_t i = start; i < end; ++i) {
            if (!body.empty()) body.push_back(' ');
            body += tokens[i];
        }
        if (!chunk.metadata.heading.empty()) {
            chunk.text = "Heading: " + chunk.metadata.heading + "\n" + body;
        } else {
            chunk.text = std::move(body);
        }
        chunks.push_back(std::move(chunk));

        if (end >= n) break;
    }
    return chunks;
}

} // namespace georag::corpus
