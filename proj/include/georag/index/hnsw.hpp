#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace georag::index {

struct HnswParams {
    size_t M = 16;                // connections per node above layer 0
    size_t ef_construction = 200; // beam width while building
    size_t ef_search = 64;        // beam width while searching
    uint64_t seed = 42;           // layer assignment seed
};

struct HnswStats {
    size_t nodes = 0;
    size_t layers = 0;                  // max level + 1
    std::vector<size_t> level_counts;   // nodes per level, level 0 first
};

/// Layered proximity graph over unit vectors for approximate top-k search by
/// cosine. The graph stores adjacency only; callers pass the vector table to
/// build() and search(), and node ids are positions in that table.
///
/// Construction follows the standard scheme: exponentially distributed node
/// levels, greedy descent through upper layers, beam search plus heuristic
/// neighbor selection at each level at or below the node's level. Level draws
/// come from a seeded generator consumed in insertion order, so rebuilding
/// with the same seed reproduces the layer assignment bit-for-bit.
class HnswGraph {
public:
    using Predicate = std::function<bool(size_t)>;

    /// Builds from scratch over vectors[0..n). Throws on empty input.
    HnswStats build(const std::vector<std::vector<double>>& unit_vectors,
                    const HnswParams& params);

    /// Top-k by cosine, highest first, ties by ascending id. `accept`, when
    /// set, keeps non-matching nodes out of the result while still routing
    /// through them. ef falls back to params.ef_search when 0.
    std::vector<std::pair<size_t, double>>
    search(const std::vector<std::vector<double>>& unit_vectors,
           const std::vector<double>& unit_query, size_t k, size_t ef = 0,
           const Predicate& accept = nullptr) const;

    bool built() const { return !levels_.empty(); }
    size_t size() const { return levels_.size(); }
    HnswStats stats() const;
    const HnswParams& params() const { return params_; }
    const std::vector<uint32_t>& levels() const { return levels_; }

    /// Adjacency of `node` at `level` (debug / persistence access).
    const std::vector<uint32_t>& neighbors(size_t node, size_t level) const;

    // Persistence hooks used by the store serializer.
    struct Snapshot {
        HnswParams params;
        uint32_t entry_point = 0;
        std::vector<uint32_t> levels;
        // links[node][level] = neighbor ids
        std::vector<std::vector<std::vector<uint32_t>>> links;
    };
    Snapshot snapshot() const;
    static HnswGraph from_snapshot(Snapshot snap);

private:
    double sim(const std::vector<double>& a, const std::vector<double>& b) const;
    size_t max_neighbors(size_t level) const;
    std::vector<std::pair<double, uint32_t>>
    search_layer(const std::vector<std::vector<double>>& vecs,
                 const std::vector<double>& query, uint32_t entry, size_t ef,
                 size_t level) const;
    std::vector<uint32_t> select_neighbors(const std::vector<std::vector<double>>& vecs,
                                           uint32_t node,
                                           std::vector<std::pair<double, uint32_t>> candidates,
                                           size_t m) const;

    HnswParams params_;
    uint32_t entry_point_ = 0;
    std::vector<uint32_t> levels_;
    std::vector<std::vector<std::vector<uint32_t>>> links_;
};

} // namespace georag::index
