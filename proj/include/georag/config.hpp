#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <georag/answer/generate.hpp>
#include <georag/corpus/chunker.hpp>
#include <georag/index/hnsw.hpp>
#include <georag/rank/fusion.hpp>

namespace georag {

/// Whole-application configuration, loadable from a single JSON document.
/// Command-line flags override file values; secrets are referenced by
/// environment-variable name only.
struct AppConfig {
    std::string corpus_path = "corpus.jsonl";
    std::string index_path = "index.grv";

    struct Provider {
        std::string kind = "deterministic"; // "deterministic" | "remote"
        std::string base_url;
        std::string model = "text-embedding-ada-002";
        size_t dim = 1536;
        std::string auth_env = "OPENAI_API_KEY";
        size_t batch_size = 64;
        size_t parallelism = 4;
    } provider;

    corpus::ChunkingConfig chunking; // 300-token chunks, 50-token overlap
    rank::FusionConfig fusion;       // alpha 0.5, top_k 5, expansion 4
    index::HnswParams hnsw;          // M 16, ef_construction 200, ef_search 64

    struct Generation {
        answer::GenerationConfig params; // temperature 0.2
        std::string base_url;
        std::string auth_env = "OPENAI_API_KEY";
    } generation;

    struct Eval {
        std::vector<uint64_t> seeds{1, 2, 3};
        size_t bootstrap_resamples = 10000;
        double faithfulness_tau = 0.7;
        double user_lat = 36.0726;  // Greensboro
        double user_lon = -79.7920;
    } eval;

    static AppConfig load(const std::filesystem::path& path);
};

} // namespace georag
