#include <georag/rank/fusion.hpp>

#include <algorithm>
#include <stdexcept>

#include <georag/errors.hpp>

namespace georag::rank {

double fuse_score(double s_semantic, double s_distance, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must be in [0, 1], got " + std::to_string(alpha));
    }
    return (1.0 - alpha) * s_semantic + alpha * s_distance;
}

std::vector<index::ScoredHit> rerank(std::vector<index::ScoredHit> candidates,
                                     const geo::UserLocation& user, const FusionConfig& cfg) {
    for (auto& hit : candidates) {
        const double km =
            geo::user_doc_distance(user, hit.chunk->metadata, cfg.max_distance_km);
        const double d = geo::normalize_distance(km, cfg.distance_scale_km);
        hit.s_distance = geo::s_distance(d);
        // negative cosine clamps to 0 so the blend stays in [0, 1]
        const double semantic = std::clamp(hit.s_semantic, 0.0, 1.0);
        hit.s_final = fuse_score(semantic, *hit.s_distance, cfg.alpha);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const index::ScoredHit& a, const index::ScoredHit& b) {
                  if (*a.s_final != *b.s_final) return *a.s_final > *b.s_final;
                  return a.chunk_id < b.chunk_id;
              });
    if (candidates.size() > cfg.top_k) candidates.resize(cfg.top_k);
    for (size_t i = 0; i < candidates.size(); ++i) candidates[i].rank = i + 1;
    return candidates;
}

std::vector<index::ScoredHit> retrieve(const index::VectorStore& store, const std::string& query,
                                       const geo::UserLocation& user,
                                       embed::EmbeddingProvider& provider,
                                       const FusionConfig& cfg,
                                       const index::MetadataFilter& filter) {
    if (provider.provider_id() != store.provider_id()) {
        throw Error("provider \"" + provider.provider_id() +
                    "\" does not match store provider \"" + store.provider_id() + "\"");
    }
    if (store.empty()) return {};
    if (cfg.top_k == 0) throw std::invalid_argument("top_k must be >= 1");

    const auto query_vec = embed::embed_text(provider, query);
    const size_t pool = cfg.top_k * std::max<size_t>(1, cfg.expansion_factor);
    auto candidates = store.ann_ready() ? store.ann_search(query_vec, filter, pool)
                                        : store.exact_search(query_vec, filter, pool);
    return rerank(std::move(candidates), user, cfg);
}

} // namespace georag::rank
