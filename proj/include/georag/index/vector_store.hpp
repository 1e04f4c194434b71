#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <georag/corpus/chunker.hpp>
#include <georag/corpus/document.hpp>
#include <georag/embed/provider.hpp>
#include <georag/index/filter.hpp>
#include <georag/index/hnsw.hpp>

namespace georag::index {

enum class IndexKind { exact, hnsw };

/// A retrieved chunk with its scores. s_distance/s_final stay unset until the
/// ranking stage fills them.
struct ScoredHit {
    std::string chunk_id;
    std::shared_ptr<const corpus::Chunk> chunk;
    double s_semantic = 0.0;
    std::optional<double> s_distance;
    std::optional<double> s_final;
    size_t rank = 0; // 1-based position in the returned list
};

struct UpsertStats {
    size_t inserted = 0;
    size_t updated = 0; // content actually changed
};

struct ReindexCounts {
    size_t added = 0;   // chunks created for new documents
    size_t updated = 0; // chunks re-embedded for changed documents
    size_t removed = 0; // stale chunks dropped
    bool any_change() const { return added + updated + removed > 0; }
};

/// Chunk embeddings with metadata, grouped into one collection per source
/// type. Supports exact and HNSW cosine top-k with metadata filtering,
/// persistence to a versioned binary file, and content-hash re-indexing.
///
/// Concurrency: many readers or one writer. Searches take a shared lock;
/// upserts, HNSW builds, and corpus syncs take the exclusive lock, so a
/// search never observes a partially applied update. Mutating a collection
/// invalidates its graph until the next build_hnsw().
class VectorStore {
public:
    VectorStore(size_t dim, std::string provider_id);

    VectorStore(VectorStore&&) noexcept;
    VectorStore& operator=(VectorStore&&) noexcept;
    VectorStore(const VectorStore&) = delete;
    VectorStore& operator=(const VectorStore&) = delete;
    ~VectorStore();

    size_t dim() const { return dim_; }
    const std::string& provider_id() const { return provider_id_; }
    size_t size() const;
    bool empty() const { return size() == 0; }

    /// Searchable mode right now: hnsw only when every non-empty collection
    /// has a fresh graph.
    IndexKind kind() const;

    /// Idempotent by chunk_id: re-upserting identical content is a no-op.
    /// Throws on dimension or provider mismatch.
    UpsertStats upsert_chunks(const std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>>& items);

    /// Removes every chunk of `document_id`; returns how many went away.
    size_t remove_document(const std::string& document_id);

    /// Brute-force cosine top-k over chunks passing the filter, sorted by
    /// similarity descending, ties by ascending chunk_id. An empty store
    /// yields an empty list.
    std::vector<ScoredHit> exact_search(const embed::EmbeddingVector& query,
                                        const MetadataFilter& filter, size_t k) const;

    /// Approximate top-k through the per-collection HNSW graphs (merged and
    /// re-sorted across collections). Requires build_hnsw() after the last
    /// mutation; otherwise throws an Error telling the caller to build.
    std::vector<ScoredHit> ann_search(const embed::EmbeddingVector& query,
                                      const MetadataFilter& filter, size_t k) const;

    /// (Re)builds the graphs for all non-empty collections. Deterministic for
    /// a given seed: insertion order is ascending chunk_id. Throws on an
    /// empty store.
    HnswStats build_hnsw(const HnswParams& params = {});
    bool ann_ready() const;

    /// Diffs the store against a corpus by per-document content hash: new
    /// documents are chunked/embedded/added, changed ones re-embedded,
    /// missing ones dropped. Untouched documents cost nothing.
    ReindexCounts sync_corpus(const std::vector<corpus::Document>& docs,
                              embed::EmbeddingProvider& provider,
                              const corpus::ChunkingConfig& chunking);

    std::vector<std::string> chunk_ids_sorted() const;
    std::shared_ptr<const corpus::Chunk> find_chunk(const std::string& chunk_id) const;

    /// Writes the versioned binary container (see store_io.cpp for the exact
    /// layout: magic, version, dim, provider id, payload checksum, chunk
    /// records, graph adjacency, document hash registry).
    void persist(const std::filesystem::path& path) const;

    /// Throws VersionError for a newer format, ChecksumError when the payload
    /// fails verification (e.g. truncation).
    static VectorStore load(const std::filesystem::path& path);

private:
    friend class StoreSerializer;

    struct Entry {
        std::shared_ptr<const corpus::Chunk> chunk;
        embed::EmbeddingVector embedding;      // as provided
        std::vector<double> unit;              // normalized copy for cosine
    };
    struct Collection {
        // ascending chunk_id; node i of the graph is ids_[i]
        std::vector<std::string> ids;
        std::vector<Entry> entries;
        HnswGraph graph;
        bool graph_fresh = false;

        std::vector<std::vector<double>> unit_view() const;
    };
    struct DocRecord {
        uint64_t content_hash = 0;
        uint32_t chunk_count = 0;
    };

    std::vector<ScoredHit> search_locked(const embed::EmbeddingVector& query,
                                         const MetadataFilter& filter, size_t k,
                                         bool approximate) const;
    void insert_entry(Collection& col, const corpus::Chunk& chunk,
                      const embed::EmbeddingVector& vec);
    std::pair<Collection*, size_t> locate(const std::string& chunk_id);
    void check_vector(const embed::EmbeddingVector& vec) const;

    size_t dim_;
    std::string provider_id_;
    std::map<corpus::SourceType, Collection> collections_;
    std::map<std::string, corpus::SourceType> id_to_collection_;
    std::map<std::string, DocRecord> documents_;
    HnswParams last_params_;
    mutable std::shared_mutex mutex_;
};

/// Re-chunks and re-embeds only what changed in the corpus file, then returns
/// the chunk-level counts. Parse errors propagate with line numbers.
ReindexCounts reindex_changed(VectorStore& store, const std::filesystem::path& corpus_path,
                              embed::EmbeddingProvider& provider,
                              const corpus::ChunkingConfig& chunking = {});

} // namespace georag::index
