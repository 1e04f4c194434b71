#include <georag/index/hnsw.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

#include <georag/errors.hpp>

namespace georag::index {

namespace {

// (similarity, id): better = higher similarity, ties to the smaller id.
struct BetterFirst {
    bool operator()(const std::pair<double, uint32_t>& a,
                    const std::pair<double, uint32_t>& b) const {
        if (a.first != b.first) return a.first < b.first; // max-heap on sim
        return a.second > b.second;
    }
};
struct WorseFirst {
    bool operator()(const std::pair<double, uint32_t>& a,
                    const std::pair<double, uint32_t>& b) const {
        if (a.first != b.first) return a.first > b.first; // min-heap on sim
        return a.second < b.second;
    }
};

/// Uniform (0, 1] from the raw engine output; pinned bit arithmetic so layer
/// assignment is identical on every platform.
double unit_draw(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
}

} // namespace

double HnswGraph::sim(const std::vector<double>& a, const std::vector<double>& b) const {
    double dot = 0.0;
    for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return dot; // inputs are unit vectors
}

size_t HnswGraph::max_neighbors(size_t level) const {
    return level == 0 ? params_.M * 2 : params_.M;
}

std::vector<std::pair<double, uint32_t>>
HnswGraph::search_layer(const std::vector<std::vector<double>>& vecs,
                        const std::vector<double>& query, uint32_t entry, size_t ef,
                        size_t level) const {
    std::priority_queue<std::pair<double, uint32_t>, std::vector<std::pair<double, uint32_t>>,
                        BetterFirst>
        candidates;
    std::priority_queue<std::pair<double, uint32_t>, std::vector<std::pair<double, uint32_t>>,
                        WorseFirst>
        best;
    std::vector<bool> visited(levels_.size(), false);

    const double entry_sim = sim(query, vecs[entry]);
    candidates.emplace(entry_sim, entry);
    best.emplace(entry_sim, entry);
    visited[entry] = true;

    while (!candidates.empty()) {
        const auto [cur_sim, cur] = candidates.top();
        candidates.pop();
        if (best.size() >= ef && cur_sim < best.top().first) break;

        for (uint32_t next : links_[cur][level]) {
            if (visited[next]) continue;
            visited[next] = true;
            const double next_sim = sim(query, vecs[next]);
            if (best.size() < ef || next_sim > best.top().first) {
                candidates.emplace(next_sim, next);
                best.emplace(next_sim, next);
                if (best.size() > ef) best.pop();
            }
        }
    }

    std::vector<std::pair<double, uint32_t>> out;
    out.reserve(best.size());
    while (!best.empty()) {
        out.push_back(best.top());
        best.pop();
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return out;
}

std::vector<uint32_t>
HnswGraph::select_neighbors(const std::vector<std::vector<double>>& vecs, uint32_t node,
                            std::vector<std::pair<double, uint32_t>> candidates,
                            size_t m) const {
    // Heuristic selection: walk candidates best-first and keep one only when
    // it is closer to the base node than to anything already kept. Produces
    // better-spread graphs than plain top-M on clustered data.
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<uint32_t> selected;
    for (const auto& [cand_sim, cand] : candidates) {
        if (selected.size() >= m) break;
        if (cand == node) continue;
        bool keep = true;
        for (uint32_t s : selected) {
            if (sim(vecs[cand], vecs[s]) > cand_sim) {
                keep = false;
                break;
            }
        }
        if (keep) selected.push_back(cand);
    }
    return selected;
}

HnswStats HnswGraph::build(const std::vector<std::vector<double>>& unit_vectors,
                           const HnswParams& params) {
    const size_t n = unit_vectors.size();
    if (n == 0) throw Error("cannot build HNSW over an empty vector set");
    if (params.M < 2) throw std::invalid_argument("HNSW M must be >= 2");

    params_ = params;
    levels_.assign(n, 0);
    links_.assign(n, {});

    const double ml = 1.0 / std::log(static_cast<double>(params.M));
    std::mt19937_64 rng(params.seed);
    for (size_t i = 0; i < n; ++i) {
        levels_[i] = static_cast<uint32_t>(-std::log(unit_draw(rng)) * ml);
        links_[i].resize(levels_[i] + 1);
    }

    entry_point_ = 0;
    uint32_t top_level = levels_[0];

    for (uint32_t node = 1; node < n; ++node) {
        const uint32_t node_level = levels_[node];
        uint32_t ep = entry_point_;

        // greedy descent through layers above the node's level
        for (uint32_t lc = top_level; lc > node_level; --lc) {
            if (lc > levels_[ep]) continue;
            bool moved = true;
            double ep_sim = sim(unit_vectors[node], unit_vectors[ep]);
            while (moved) {
                moved = false;
                for (uint32_t next : links_[ep][lc]) {
                    const double s = sim(unit_vectors[node], unit_vectors[next]);
                    if (s > ep_sim) {
                        ep_sim = s;
                        ep = next;
                        moved = true;
                    }
                }
            }
        }

        // connect at every layer from min(top, node_level) down to 0
        for (uint32_t lc = std::min(top_level, node_level);; --lc) {
            auto candidates = search_layer(unit_vectors, unit_vectors[node], ep,
                                           params.ef_construction, lc);
            auto neighbors = select_neighbors(unit_vectors, node, candidates, params_.M);
            links_[node][lc] = neighbors;
            for (uint32_t nb : neighbors) {
                auto& back = links_[nb][lc];
                back.push_back(node);
                const size_t cap = max_neighbors(lc);
                if (back.size() > cap) {
                    std::vector<std::pair<double, uint32_t>> cands;
                    cands.reserve(back.size());
                    for (uint32_t b : back) {
                        cands.emplace_back(sim(unit_vectors[nb], unit_vectors[b]), b);
                    }
                    back = select_neighbors(unit_vectors, nb, std::move(cands), cap);
                }
            }
            if (!candidates.empty()) ep = candidates.front().second;
            if (lc == 0) break;
        }

        if (node_level > top_level) {
            top_level = node_level;
            entry_point_ = node;
        }
    }
    return stats();
}

std::vector<std::pair<size_t, double>>
HnswGraph::search(const std::vector<std::vector<double>>& unit_vectors,
                  const std::vector<double>& unit_query, size_t k, size_t ef,
                  const Predicate& accept) const {
    if (!built()) {
        throw Error("HNSW index not built; call build_hnsw() before ann_search");
    }
    if (ef == 0) ef = params_.ef_search;
    ef = std::max(ef, k);

    uint32_t ep = entry_point_;
    double ep_sim = sim(unit_query, unit_vectors[ep]);
    for (uint32_t lc = levels_[entry_point_]; lc > 0; --lc) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (uint32_t next : links_[ep][lc]) {
                const double s = sim(unit_query, unit_vectors[next]);
                if (s > ep_sim) {
                    ep_sim = s;
                    ep = next;
                    moved = true;
                }
            }
        }
    }

    // beam over layer 0; non-accepted nodes still route but never surface
    std::priority_queue<std::pair<double, uint32_t>, std::vector<std::pair<double, uint32_t>>,
                        BetterFirst>
        candidates;
    std::priority_queue<std::pair<double, uint32_t>, std::vector<std::pair<double, uint32_t>>,
                        WorseFirst>
        best;
    std::vector<bool> visited(levels_.size(), false);

    auto admit = [&](uint32_t node, double s) {
        if (accept && !accept(node)) return;
        best.emplace(s, node);
        if (best.size() > ef) best.pop();
    };

    visited[ep] = true;
    candidates.emplace(ep_sim, ep);
    admit(ep, ep_sim);

    while (!candidates.empty()) {
        const auto [cur_sim, cur] = candidates.top();
        candidates.pop();
        if (best.size() >= ef && cur_sim < best.top().first) break;
        for (uint32_t next : links_[cur][0]) {
            if (visited[next]) continue;
            visited[next] = true;
            const double s = sim(unit_query, unit_vectors[next]);
            if (best.size() < ef || s > best.top().first) {
                candidates.emplace(s, next);
                admit(next, s);
            }
        }
    }

    std::vector<std::pair<size_t, double>> out;
    out.reserve(best.size());
    while (!best.empty()) {
        out.emplace_back(best.top().second, best.top().first);
        best.pop();
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (out.size() > k) out.resize(k);
    return out;
}

HnswStats HnswGraph::stats() const {
    HnswStats st;
    st.nodes = levels_.size();
    for (uint32_t level : levels_) {
        if (level + 1 > st.layers) st.layers = level + 1;
    }
    st.level_counts.assign(st.layers, 0);
    for (uint32_t level : levels_) ++st.level_counts[level];
    return st;
}

const std::vector<uint32_t>& HnswGraph::neighbors(size_t node, size_t level) const {
    return links_.at(node).at(level);
}

HnswGraph::Snapshot HnswGraph::snapshot() const {
    return Snapshot{params_, entry_point_, levels_, links_};
}

HnswGraph HnswGraph::from_snapshot(Snapshot snap) {
    HnswGraph g;
    g.params_ = snap.params;
    g.entry_point_ = snap.entry_point;
    g.levels_ = std::move(snap.levels);
    g.links_ = std::move(snap.links);
    return g;
}

} // namespace georag::index
