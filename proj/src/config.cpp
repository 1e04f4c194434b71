#include <georag/config.hpp>

#include <fstream>

#include <json.hpp>

#include <georag/errors.hpp>

namespace georag {

namespace {

using nlohmann::json;

template <typename T>
void read(const json& obj, const char* key, T& into) {
    if (obj.contains(key)) into = obj.at(key).get<T>();
}

} // namespace

AppConfig AppConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path.string());

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("config " + path.string() + ": " + e.what());
    }

    AppConfig cfg;
    read(root, "corpus_path", cfg.corpus_path);
    read(root, "index_path", cfg.index_path);

    if (root.contains("provider")) {
        const auto& p = root.at("provider");
        read(p, "kind", cfg.provider.kind);
        read(p, "base_url", cfg.provider.base_url);
        read(p, "model", cfg.provider.model);
        read(p, "dim", cfg.provider.dim);
        read(p, "auth_env", cfg.provider.auth_env);
        read(p, "batch_size", cfg.provider.batch_size);
        read(p, "parallelism", cfg.provider.parallelism);
    }
    if (cfg.provider.kind != "deterministic" && cfg.provider.kind != "remote") {
        throw ParseError("provider.kind must be \"deterministic\" or \"remote\", got \"" +
                         cfg.provider.kind + "\"");
    }

    if (root.contains("chunking")) {
        const auto& c = root.at("chunking");
        read(c, "chunk_size", cfg.chunking.chunk_size);
        read(c, "overlap", cfg.chunking.overlap);
    }
    if (root.contains("fusion")) {
        const auto& f = root.at("fusion");
        read(f, "alpha", cfg.fusion.alpha);
        read(f, "top_k", cfg.fusion.top_k);
        read(f, "expansion_factor", cfg.fusion.expansion_factor);
    }
    if (root.contains("distance")) {
        const auto& d = root.at("distance");
        read(d, "distance_scale_km", cfg.fusion.distance_scale_km);
        read(d, "max_distance_km", cfg.fusion.max_distance_km);
    }
    if (root.contains("hnsw")) {
        const auto& h = root.at("hnsw");
        read(h, "M", cfg.hnsw.M);
        read(h, "ef_construction", cfg.hnsw.ef_construction);
        read(h, "ef_search", cfg.hnsw.ef_search);
        read(h, "seed", cfg.hnsw.seed);
    }
    if (root.contains("generation")) {
        const auto& g = root.at("generation");
        read(g, "temperature", cfg.generation.params.temperature);
        read(g, "max_output_tokens", cfg.generation.params.max_output_tokens);
        read(g, "model", cfg.generation.params.model);
        read(g, "region_name", cfg.generation.params.region_name);
        read(g, "base_url", cfg.generation.base_url);
        read(g, "auth_env", cfg.generation.auth_env);
    }
    if (root.contains("eval")) {
        const auto& e = root.at("eval");
        read(e, "seeds", cfg.eval.seeds);
        read(e, "bootstrap_resamples", cfg.eval.bootstrap_resamples);
        read(e, "faithfulness_tau", cfg.eval.faithfulness_tau);
        read(e, "user_lat", cfg.eval.user_lat);
        read(e, "user_lon", cfg.eval.user_lon);
    }
    return cfg;
}

} // namespace georag
