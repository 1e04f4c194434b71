#pragma once

#include <georag/embed/provider.hpp>
#include <georag/geo/distance.hpp>
#include <georag/index/vector_store.hpp>

namespace georag::rank {

/// Knobs for locality-weighted retrieval. alpha blends the distance score
/// into the final score; expansion_factor widens the semantic candidate pool
/// before fusion so the locality term can change which chunks survive, not
/// just their order (expansion_factor = 1 reproduces a pure re-order of the
/// semantic top-k).
struct FusionConfig {
    double alpha = 0.5;
    size_t top_k = 5;
    size_t expansion_factor = 4;
    double distance_scale_km = geo::kDefaultDistanceScaleKm;
    double max_distance_km = geo::kDefaultMaxDistanceKm;
};

/// s_final = (1 - alpha) * s_semantic + alpha * s_distance.
/// Throws std::invalid_argument when alpha is outside [0, 1].
double fuse_score(double s_semantic, double s_distance, double alpha);

/// Fills s_distance and s_final on every candidate (negative cosine clamps to
/// 0 before fusion), sorts by s_final descending with ties broken by
/// ascending chunk_id, truncates to cfg.top_k, and renumbers ranks from 1.
std::vector<index::ScoredHit> rerank(std::vector<index::ScoredHit> candidates,
                                     const geo::UserLocation& user, const FusionConfig& cfg);

/// Full retrieval: embeds the query (with the provider prefix), pulls the
/// top (top_k * expansion_factor) semantic candidates (HNSW when built, exact
/// otherwise), then reranks down to top_k. Throws when the provider does not
/// match the store's.
std::vector<index::ScoredHit> retrieve(const index::VectorStore& store, const std::string& query,
                                       const geo::UserLocation& user,
                                       embed::EmbeddingProvider& provider, const FusionConfig& cfg,
                                       const index::MetadataFilter& filter = {});

} // namespace georag::rank
