// Versioned binary container for VectorStore persistence.
//
// Layout (all integers little-endian, strings are u32 length + bytes,
// doubles are IEEE-754 bit patterns written as u64):
//
//   magic            8 bytes "GRVSTORE"
//   version          u32 (current = 1)
//   dim              u32
//   provider_id      str
//   payload_size     u64
//   payload_checksum u64 (FNV-1a 64 over the payload bytes)
//   payload:
//     collection_count u32
//     per collection:
//       source_type  u8
//       entry_count  u64
//       per entry (ascending chunk_id):
//         chunk_id str, document_id str, text str,
//         span_start u64, span_end u64,
//         metadata: source_type u8, has_year u8 [year i32],
//                   region_tag_count u32 (code str, name str)*,
//                   has_centroid u8 [lat f64, lon f64],
//                   tag_count u32 (tag str)*, heading str
//         embedding f64 * dim
//       graph_present u8
//       [graph: M u32, ef_construction u32, ef_search u32, seed u64,
//               entry_point u32, node_count u64,
//               per node: level u32, per level 0..level:
//                           neighbor_count u32, neighbor u32*]
//     document_count u64
//     per document: id str, content_hash u64, chunk_count u32

#include <bit>
#include <cstring>
#include <fstream>

#include <georag/errors.hpp>
#include <georag/hashing.hpp>
#include <georag/index/vector_store.hpp>

namespace georag::index {

namespace {

constexpr char kMagic[8] = {'G', 'R', 'V', 'S', 'T', 'O', 'R', 'E'};
constexpr uint32_t kFormatVersion = 1;

class Writer {
public:
    void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    void i32(int32_t v) { u32(static_cast<uint32_t>(v)); }
    void f64(double v) { u64(std::bit_cast<uint64_t>(v)); }
    void str(const std::string& s) {
        u32(static_cast<uint32_t>(s.size()));
        buf_.append(s);
    }
    const std::string& bytes() const { return buf_; }

private:
    std::string buf_;
};

class Reader {
public:
    Reader(const char* data, size_t size) : data_(data), size_(size) {}

    uint8_t u8() { return static_cast<uint8_t>(take(1)[0]); }
    uint32_t u32() {
        const char* p = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<uint8_t>(p[i])) << (8 * i);
        return v;
    }
    uint64_t u64() {
        const char* p = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<uint8_t>(p[i])) << (8 * i);
        return v;
    }
    int32_t i32() { return static_cast<int32_t>(u32()); }
    double f64() { return std::bit_cast<double>(u64()); }
    std::string str() {
        const uint32_t len = u32();
        return std::string(take(len), len);
    }

private:
    const char* take(size_t n) {
        if (pos_ + n > size_) throw ChecksumError("store file payload is truncated");
        const char* p = data_ + pos_;
        pos_ += n;
        return p;
    }
    const char* data_;
    size_t size_;
    size_t pos_ = 0;
};

} // namespace

class StoreSerializer {
public:
    static void write(const VectorStore& store, const std::filesystem::path& path) {
        std::shared_lock lock(store.mutex_);

        Writer payload;
        payload.u32(static_cast<uint32_t>(store.collections_.size()));
        for (const auto& [type, col] : store.collections_) {
            payload.u8(static_cast<uint8_t>(type));
            payload.u64(col.entries.size());
            for (size_t i = 0; i < col.entries.size(); ++i) {
                const auto& entry = col.entries[i];
                const auto& c = *entry.chunk;
                payload.str(c.chunk_id);
                payload.str(c.document_id);
                payload.str(c.text);
                payload.u64(c.token_span.first);
                payload.u64(c.token_span.second);
                const auto& m = c.metadata;
                payload.u8(static_cast<uint8_t>(m.source_type));
                payload.u8(m.year ? 1 : 0);
                if (m.year) payload.i32(*m.year);
                payload.u32(static_cast<uint32_t>(m.region_tags.size()));
                for (const auto& tag : m.region_tags) {
                    payload.str(tag.code);
                    payload.str(tag.name);
                }
                payload.u8(m.centroid ? 1 : 0);
                if (m.centroid) {
                    payload.f64(m.centroid->lat());
                    payload.f64(m.centroid->lon());
                }
                payload.u32(static_cast<uint32_t>(m.tags.size()));
                for (const auto& tag : m.tags) payload.str(tag);
                payload.str(m.heading);
                for (double v : entry.embedding.values) payload.f64(v);
            }
            payload.u8(col.graph_fresh ? 1 : 0);
            if (col.graph_fresh) {
                const auto snap = col.graph.snapshot();
                payload.u32(static_cast<uint32_t>(snap.params.M));
                payload.u32(static_cast<uint32_t>(snap.params.ef_construction));
                payload.u32(static_cast<uint32_t>(snap.params.ef_search));
                payload.u64(snap.params.seed);
                payload.u32(snap.entry_point);
                payload.u64(snap.levels.size());
                for (size_t node = 0; node < snap.levels.size(); ++node) {
                    payload.u32(snap.levels[node]);
                    for (size_t level = 0; level <= snap.levels[node]; ++level) {
                        const auto& nbrs = snap.links[node][level];
                        payload.u32(static_cast<uint32_t>(nbrs.size()));
                        for (uint32_t nb : nbrs) payload.u32(nb);
                    }
                }
            }
        }
        payload.u64(store.documents_.size());
        for (const auto& [id, rec] : store.documents_) {
            payload.str(id);
            payload.u64(rec.content_hash);
            payload.u32(rec.chunk_count);
        }

        Writer header;
        header.u32(kFormatVersion);
        header.u32(static_cast<uint32_t>(store.dim_));
        header.str(store.provider_id_);
        header.u64(payload.bytes().size());
        header.u64(fnv1a64_bytes(payload.bytes().data(), payload.bytes().size()));

        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open store file for writing: " + path.string());
        out.write(kMagic, sizeof kMagic);
        out.write(header.bytes().data(), static_cast<std::streamsize>(header.bytes().size()));
        out.write(payload.bytes().data(), static_cast<std::streamsize>(payload.bytes().size()));
        if (!out) throw Error("failed writing store file: " + path.string());
    }

    static VectorStore read(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open store file: " + path.string());
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

        if (data.size() < sizeof kMagic || std::memcmp(data.data(), kMagic, sizeof kMagic) != 0) {
            throw Error("not a vector store file (bad magic): " + path.string());
        }
        Reader head(data.data() + sizeof kMagic, data.size() - sizeof kMagic);
        const uint32_t version = head.u32();
        if (version > kFormatVersion) {
            throw VersionError("store file version " + std::to_string(version) +
                               " is newer than supported version " +
                               std::to_string(kFormatVersion));
        }
        const uint32_t dim = head.u32();
        const std::string provider_id = head.str();
        const uint64_t payload_size = head.u64();
        const uint64_t checksum = head.u64();

        const size_t header_bytes = sizeof kMagic + 4 + 4 + 4 + provider_id.size() + 8 + 8;
        if (data.size() < header_bytes + payload_size) {
            throw ChecksumError("store file payload is truncated: " + path.string());
        }
        const char* payload = data.data() + header_bytes;
        if (fnv1a64_bytes(payload, payload_size) != checksum) {
            throw ChecksumError("store file checksum mismatch: " + path.string());
        }

        VectorStore store(dim, provider_id);
        Reader r(payload, payload_size);
        const uint32_t collection_count = r.u32();
        for (uint32_t ci = 0; ci < collection_count; ++ci) {
            const auto type = static_cast<corpus::SourceType>(r.u8());
            auto& col = store.collections_[type];
            const uint64_t entry_count = r.u64();
            col.ids.reserve(entry_count);
            col.entries.reserve(entry_count);
            for (uint64_t ei = 0; ei < entry_count; ++ei) {
                corpus::Chunk chunk;
                chunk.chunk_id = r.str();
                chunk.document_id = r.str();
                chunk.text = r.str();
                chunk.token_span.first = r.u64();
                chunk.token_span.second = r.u64();
                auto& m = chunk.metadata;
                m.source_type = static_cast<corpus::SourceType>(r.u8());
                if (r.u8()) m.year = r.i32();
                const uint32_t n_regions = r.u32();
                for (uint32_t t = 0; t < n_regions; ++t) {
                    std::string code = r.str();
                    std::string name = r.str();
                    m.region_tags.emplace_back(std::move(code), std::move(name));
                }
                if (r.u8()) {
                    const double lat = r.f64();
                    const double lon = r.f64();
                    m.centroid = geo::GeoPoint(lat, lon);
                }
                const uint32_t n_tags = r.u32();
                for (uint32_t t = 0; t < n_tags; ++t) m.tags.push_back(r.str());
                m.heading = r.str();

                VectorStore::Entry entry;
                embed::EmbeddingVector vec;
                vec.provider_id = provider_id;
                vec.values.resize(dim);
                for (uint32_t d = 0; d < dim; ++d) vec.values[d] = r.f64();
                entry.chunk = std::make_shared<corpus::Chunk>(std::move(chunk));
                entry.embedding = std::move(vec);
                entry.unit = entry.embedding.normalized().values;

                col.ids.push_back(entry.chunk->chunk_id);
                store.id_to_collection_.emplace(entry.chunk->chunk_id, type);
                col.entries.push_back(std::move(entry));
            }
            if (r.u8()) {
                HnswGraph::Snapshot snap;
                snap.params.M = r.u32();
                snap.params.ef_construction = r.u32();
                snap.params.ef_search = r.u32();
                snap.params.seed = r.u64();
                snap.entry_point = r.u32();
                const uint64_t node_count = r.u64();
                snap.levels.resize(node_count);
                snap.links.resize(node_count);
                for (uint64_t node = 0; node < node_count; ++node) {
                    snap.levels[node] = r.u32();
                    snap.links[node].resize(snap.levels[node] + 1);
                    for (uint32_t level = 0; level <= snap.levels[node]; ++level) {
                        const uint32_t n = r.u32();
                        snap.links[node][level].resize(n);
                        for (uint32_t j = 0; j < n; ++j) snap.links[node][level][j] = r.u32();
                    }
                }
                col.graph = HnswGraph::from_snapshot(std::move(snap));
                col.graph_fresh = true;
                store.last_params_ = col.graph.params();
            }
        }
        const uint64_t doc_count = r.u64();
        for (uint64_t i = 0; i < doc_count; ++i) {
            std::string id = r.str();
            VectorStore::DocRecord rec;
            rec.content_hash = r.u64();
            rec.chunk_count = r.u32();
            store.documents_.emplace(std::move(id), rec);
        }
        return store;
    }
};

void VectorStore::persist(const std::filesystem::path& path) const {
    StoreSerializer::write(*this, path);
}

VectorStore VectorStore::load(const std::filesystem::path& path) {
    return StoreSerializer::read(path);
}

} // namespace georag::index
