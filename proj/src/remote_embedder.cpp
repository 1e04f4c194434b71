#include <georag/embed/remote_embedder.hpp>

#include <future>

#include <json.hpp>

#include <georag/errors.hpp>

#include "http_util.hpp"

namespace georag::embed {

using nlohmann::json;
using http::auth_headers;
using http::post_with_retry;
using http::retryable_status;
using http::split_url;

RemoteEmbedder::RemoteEmbedder(RemoteProviderConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.base_url.empty()) throw Error("remote embedder requires base_url");
    if (cfg_.model.empty()) throw Error("remote embedder requires a model name");
    if (cfg_.batch_size == 0) cfg_.batch_size = 1;
    if (cfg_.parallelism == 0) cfg_.parallelism = 1;
    provider_id_ = cfg_.model;
}

std::vector<EmbeddingVector> RemoteEmbedder::request_batch(std::span<const std::string> inputs) {
    json body;
    body["model"] = cfg_.model;
    body["input"] = json::array();
    for (const auto& s : inputs) body["input"].push_back(s);

    auto res = post_with_retry(split_url(cfg_.base_url), "/embeddings",
                               auth_headers(cfg_.auth_env), body.dump(), cfg_.max_retries,
                               cfg_.timeout_sec);
    if (!res) {
        throw TransportError("embeddings request failed: " + httplib::to_string(res.error()),
                             0, true);
    }
    if (res->status != 200) {
        throw TransportError("embeddings request returned HTTP " + std::to_string(res->status),
                             res->status, retryable_status(res->status));
    }

    json parsed;
    try {
        parsed = json::parse(res->body);
    } catch (const json::parse_error& e) {
        throw Error(std::string("embeddings response is not valid JSON: ") + e.what());
    }
    if (!parsed.contains("data") || !parsed["data"].is_array()) {
        throw Error("embeddings response missing \"data\" array");
    }

    std::vector<EmbeddingVector> out(inputs.size());
    std::vector<bool> filled(inputs.size(), false);
    for (const auto& item : parsed["data"]) {
        const size_t idx = item.at("index").get<size_t>();
        if (idx >= inputs.size()) {
            throw Error("embeddings response index " + std::to_string(idx) + " out of range");
        }
        auto vec = item.at("embedding").get<std::vector<double>>();
        if (vec.size() != cfg_.dim) {
            throw Error("embedding dimension mismatch: expected " + std::to_string(cfg_.dim) +
                        ", got " + std::to_string(vec.size()));
        }
        out[idx] = EmbeddingVector{std::move(vec), provider_id_};
        filled[idx] = true;
    }
    for (size_t i = 0; i < filled.size(); ++i) {
        if (!filled[i]) throw Error("embeddings response missing index " + std::to_string(i));
    }
    return out;
}

std::vector<EmbeddingVector> RemoteEmbedder::embed_batch(std::span<const std::string> inputs) {
    std::vector<EmbeddingVector> out(inputs.size());
    // issue up to cfg_.parallelism batches at a time; results land by index
    for (size_t wave_start = 0; wave_start < inputs.size();) {
        std::vector<std::pair<size_t, std::future<std::vector<EmbeddingVector>>>> inflight;
        for (size_t p = 0; p < cfg_.parallelism && wave_start < inputs.size(); ++p) {
            const size_t count = std::min(cfg_.batch_size, inputs.size() - wave_start);
            auto slice = inputs.subspan(wave_start, count);
            inflight.emplace_back(wave_start, std::async(std::launch::async, [this, slice] {
                                      return request_batch(slice);
                                  }));
            wave_start += count;
        }
        for (auto& [offset, fut] : inflight) {
            auto vectors = fut.get();
            for (size_t i = 0; i < vectors.size(); ++i) out[offset + i] = std::move(vectors[i]);
        }
    }
    return out;
}

} // namespace georag::embed
