#include <georag/index/vector_store.hpp>

#include <algorithm>
#include <mutex>

#include <georag/corpus/loader.hpp>
#include <georag/errors.hpp>

namespace georag::index {

VectorStore::VectorStore(size_t dim, std::string provider_id)
    : dim_(dim), provider_id_(std::move(provider_id)) {
    if (dim_ == 0) throw std::invalid_argument("vector store dim must be positive");
}

VectorStore::~VectorStore() = default;

VectorStore::VectorStore(VectorStore&& other) noexcept {
    std::unique_lock lock(other.mutex_);
    dim_ = other.dim_;
    provider_id_ = std::move(other.provider_id_);
    collections_ = std::move(other.collections_);
    id_to_collection_ = std::move(other.id_to_collection_);
    documents_ = std::move(other.documents_);
    last_params_ = other.last_params_;
}

VectorStore& VectorStore::operator=(VectorStore&& other) noexcept {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        dim_ = other.dim_;
        provider_id_ = std::move(other.provider_id_);
        collections_ = std::move(other.collections_);
        id_to_collection_ = std::move(other.id_to_collection_);
        documents_ = std::move(other.documents_);
        last_params_ = other.last_params_;
    }
    return *this;
}

std::vector<std::vector<double>> VectorStore::Collection::unit_view() const {
    std::vector<std::vector<double>> view;
    view.reserve(entries.size());
    for (const auto& e : entries) view.push_back(e.unit);
    return view;
}

size_t VectorStore::size() const {
    std::shared_lock lock(mutex_);
    return id_to_collection_.size();
}

IndexKind VectorStore::kind() const {
    return ann_ready() ? IndexKind::hnsw : IndexKind::exact;
}

bool VectorStore::ann_ready() const {
    std::shared_lock lock(mutex_);
    if (id_to_collection_.empty()) return false;
    for (const auto& [type, col] : collections_) {
        if (!col.entries.empty() && !col.graph_fresh) return false;
    }
    return true;
}

void VectorStore::check_vector(const embed::EmbeddingVector& vec) const {
    if (vec.dim() != dim_) {
        throw Error("vector dimension " + std::to_string(vec.dim()) +
                    " does not match store dimension " + std::to_string(dim_));
    }
    if (!vec.provider_id.empty() && vec.provider_id != provider_id_) {
        throw Error("vector provider \"" + vec.provider_id + "\" does not match store provider \"" +
                    provider_id_ + "\"");
    }
}

std::pair<VectorStore::Collection*, size_t> VectorStore::locate(const std::string& chunk_id) {
    auto it = id_to_collection_.find(chunk_id);
    if (it == id_to_collection_.end()) return {nullptr, 0};
    auto& col = collections_[it->second];
    auto pos = std::lower_bound(col.ids.begin(), col.ids.end(), chunk_id);
    return {&col, static_cast<size_t>(pos - col.ids.begin())};
}

void VectorStore::insert_entry(Collection& col, const corpus::Chunk& chunk,
                               const embed::EmbeddingVector& vec) {
    auto pos = std::lower_bound(col.ids.begin(), col.ids.end(), chunk.chunk_id);
    const size_t idx = pos - col.ids.begin();
    col.ids.insert(pos, chunk.chunk_id);
    Entry entry;
    entry.chunk = std::make_shared<corpus::Chunk>(chunk);
    entry.embedding = vec;
    entry.unit = vec.normalized().values;
    col.entries.insert(col.entries.begin() + idx, std::move(entry));
    col.graph_fresh = false;
}

UpsertStats VectorStore::upsert_chunks(
    const std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>>& items) {
    std::unique_lock lock(mutex_);
    UpsertStats stats;
    for (const auto& [chunk, vec] : items) {
        check_vector(vec);
        auto [col, idx] = locate(chunk.chunk_id);
        if (col) {
            auto& existing = col->entries[idx];
            const bool same_vec = existing.embedding.values == vec.values;
            const bool same_text = existing.chunk->text == chunk.text;
            const bool same_type = existing.chunk->metadata.source_type ==
                                   chunk.metadata.source_type;
            if (same_vec && same_text && same_type) continue; // identical content

            if (same_type) {
                existing.chunk = std::make_shared<corpus::Chunk>(chunk);
                existing.embedding = vec;
                existing.unit = vec.normalized().values;
                col->graph_fresh = false;
            } else {
                // moved across collections: drop and reinsert
                col->ids.erase(col->ids.begin() + idx);
                col->entries.erase(col->entries.begin() + idx);
                col->graph_fresh = false;
                auto& dest = collections_[chunk.metadata.source_type];
                insert_entry(dest, chunk, vec);
                id_to_collection_[chunk.chunk_id] = chunk.metadata.source_type;
            }
            ++stats.updated;
        } else {
            auto& dest = collections_[chunk.metadata.source_type];
            insert_entry(dest, chunk, vec);
            id_to_collection_.emplace(chunk.chunk_id, chunk.metadata.source_type);
            ++stats.inserted;
        }
    }
    return stats;
}

size_t VectorStore::remove_document(const std::string& document_id) {
    std::unique_lock lock(mutex_);
    size_t removed = 0;
    for (auto& [type, col] : collections_) {
        for (size_t i = col.entries.size(); i-- > 0;) {
            if (col.entries[i].chunk->document_id == document_id) {
                id_to_collection_.erase(col.ids[i]);
                col.ids.erase(col.ids.begin() + i);
                col.entries.erase(col.entries.begin() + i);
                col.graph_fresh = false;
                ++removed;
            }
        }
    }
    documents_.erase(document_id);
    return removed;
}

std::vector<ScoredHit> VectorStore::search_locked(const embed::EmbeddingVector& query,
                                                  const MetadataFilter& filter, size_t k,
                                                  bool approximate) const {
    check_vector(query);
    if (k == 0) throw std::invalid_argument("k must be >= 1");

    const auto unit_query = query.normalized().values;
    const bool zero_query = query.is_zero();

    std::vector<ScoredHit> merged;
    for (const auto& [type, col] : collections_) {
        if (col.entries.empty()) continue;
        if (filter.source_types && !filter.source_types->count(type)) continue;

        if (approximate) {
            if (!col.graph_fresh) {
                throw Error("HNSW index not built for collection \"" + corpus::to_string(type) +
                            "\"; run build_hnsw() first");
            }
            HnswGraph::Predicate accept;
            if (!filter.is_empty()) {
                accept = [&col, &filter](size_t node) {
                    return filter.matches(col.entries[node].chunk->metadata);
                };
            }
            const auto view = col.unit_view();
            for (const auto& [node, sim] : col.graph.search(view, unit_query, k, 0, accept)) {
                const auto& entry = col.entries[node];
                merged.push_back(ScoredHit{col.ids[node], entry.chunk,
                                           zero_query || entry.embedding.is_zero() ? 0.0 : sim,
                                           std::nullopt, std::nullopt, 0});
            }
        } else {
            for (size_t i = 0; i < col.entries.size(); ++i) {
                const auto& entry = col.entries[i];
                if (!filter.matches(entry.chunk->metadata)) continue;
                double sim = 0.0;
                if (!zero_query && !entry.embedding.is_zero()) {
                    for (size_t d = 0; d < unit_query.size(); ++d) {
                        sim += unit_query[d] * entry.unit[d];
                    }
                }
                merged.push_back(ScoredHit{col.ids[i], entry.chunk, sim, std::nullopt,
                                           std::nullopt, 0});
            }
        }
    }

    std::sort(merged.begin(), merged.end(), [](const ScoredHit& a, const ScoredHit& b) {
        if (a.s_semantic != b.s_semantic) return a.s_semantic > b.s_semantic;
        return a.chunk_id < b.chunk_id;
    });
    if (merged.size() > k) merged.resize(k);
    for (size_t i = 0; i < merged.size(); ++i) merged[i].rank = i + 1;
    return merged;
}

std::vector<ScoredHit> VectorStore::exact_search(const embed::EmbeddingVector& query,
                                                 const MetadataFilter& filter, size_t k) const {
    std::shared_lock lock(mutex_);
    return search_locked(query, filter, k, /*approximate=*/false);
}

std::vector<ScoredHit> VectorStore::ann_search(const embed::EmbeddingVector& query,
                                               const MetadataFilter& filter, size_t k) const {
    std::shared_lock lock(mutex_);
    return search_locked(query, filter, k, /*approximate=*/true);
}

HnswStats VectorStore::build_hnsw(const HnswParams& params) {
    std::unique_lock lock(mutex_);
    if (id_to_collection_.empty()) throw Error("cannot build HNSW over an empty store");

    last_params_ = params;
    HnswStats total;
    for (auto& [type, col] : collections_) {
        if (col.entries.empty()) continue;
        const auto stats = col.graph.build(col.unit_view(), params);
        col.graph_fresh = true;
        total.nodes += stats.nodes;
        total.layers = std::max(total.layers, stats.layers);
        if (total.level_counts.size() < stats.level_counts.size()) {
            total.level_counts.resize(stats.level_counts.size(), 0);
        }
        for (size_t i = 0; i < stats.level_counts.size(); ++i) {
            total.level_counts[i] += stats.level_counts[i];
        }
    }
    return total;
}

std::vector<std::string> VectorStore::chunk_ids_sorted() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> ids;
    ids.reserve(id_to_collection_.size());
    for (const auto& [id, type] : id_to_collection_) ids.push_back(id);
    return ids; // map iteration is already sorted
}

std::shared_ptr<const corpus::Chunk> VectorStore::find_chunk(const std::string& chunk_id) const {
    std::shared_lock lock(mutex_);
    auto it = id_to_collection_.find(chunk_id);
    if (it == id_to_collection_.end()) return nullptr;
    const auto& col = collections_.at(it->second);
    auto pos = std::lower_bound(col.ids.begin(), col.ids.end(), chunk_id);
    return col.entries[pos - col.ids.begin()].chunk;
}

ReindexCounts VectorStore::sync_corpus(const std::vector<corpus::Document>& docs,
                                       embed::EmbeddingProvider& provider,
                                       const corpus::ChunkingConfig& chunking) {
    if (provider.provider_id() != provider_id_) {
        throw Error("provider \"" + provider.provider_id() + "\" does not match store provider \"" +
                    provider_id_ + "\"");
    }

    ReindexCounts counts;
    std::vector<std::string> corpus_ids;
    for (const auto& doc : docs) {
        corpus_ids.push_back(doc.id);
        const uint64_t hash = corpus::document_content_hash(doc);
        uint32_t previous_chunks = 0;
        bool known = false;
        {
            std::shared_lock lock(mutex_);
            auto it = documents_.find(doc.id);
            if (it != documents_.end()) {
                if (it->second.content_hash == hash) continue; // unchanged
                known = true;
                previous_chunks = it->second.chunk_count;
            }
        }

        const auto chunks = corpus::chunk_document(doc, chunking);
        std::vector<std::string> texts;
        texts.reserve(chunks.size());
        for (const auto& c : chunks) texts.push_back(c.text);
        auto vectors = embed::embed_texts(provider, texts);

        std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
        items.reserve(chunks.size());
        for (size_t i = 0; i < chunks.size(); ++i) {
            items.emplace_back(chunks[i], std::move(vectors[i]));
        }
        upsert_chunks(items);

        // drop ordinals past the new chunk count
        {
            std::unique_lock lock(mutex_);
            for (uint32_t ord = chunks.size(); ord < previous_chunks; ++ord) {
                const std::string stale_id = doc.id + "#" + std::to_string(ord);
                auto [col, idx] = locate(stale_id);
                if (col) {
                    col->ids.erase(col->ids.begin() + idx);
                    col->entries.erase(col->entries.begin() + idx);
                    col->graph_fresh = false;
                    id_to_collection_.erase(stale_id);
                    ++counts.removed;
                }
            }
            documents_[doc.id] = DocRecord{hash, static_cast<uint32_t>(chunks.size())};
        }
        if (known) {
            counts.updated += chunks.size();
        } else {
            counts.added += chunks.size();
        }
    }

    // documents that vanished from the corpus
    std::vector<std::string> gone;
    {
        std::shared_lock lock(mutex_);
        for (const auto& [id, rec] : documents_) {
            if (std::find(corpus_ids.begin(), corpus_ids.end(), id) == corpus_ids.end()) {
                gone.push_back(id);
            }
        }
    }
    for (const auto& id : gone) counts.removed += remove_document(id);
    return counts;
}

ReindexCounts reindex_changed(VectorStore& store, const std::filesystem::path& corpus_path,
                              embed::EmbeddingProvider& provider,
                              const corpus::ChunkingConfig& chunking) {
    return store.sync_corpus(corpus::load_corpus(corpus_path), provider, chunking);
}

} // namespace georag::index
