#pragma once

#include <georag/embed/provider.hpp>

namespace georag::embed {

/// Connection settings for an OpenAI-compatible embeddings endpoint.
/// Auth is a bearer token read from the environment variable named in
/// `auth_env` (empty = no auth header); the token never lives in config.
struct RemoteProviderConfig {
    std::string base_url;          // e.g. "http://localhost:8089/v1"
    std::string model;             // e.g. "text-embedding-ada-002"
    size_t dim = 1536;             // expected vector width; mismatch is fatal
    std::string auth_env;          // env var holding the bearer token
    size_t batch_size = 64;        // inputs per request
    size_t parallelism = 4;        // concurrent in-flight requests
    size_t max_retries = 2;        // extra attempts on retryable failures
    int timeout_sec = 30;
};

/// HTTP client for POST <base_url>/embeddings with
///   {"model": ..., "input": ["text: ...", ...]}
/// Responses are matched to inputs via the "index" field, not arrival order.
/// Batches may be issued concurrently up to cfg.parallelism. 429/5xx and
/// connection failures raise a retryable TransportError after retries are
/// exhausted; a response vector of the wrong width is a hard Error.
class RemoteEmbedder final : public EmbeddingProvider {
public:
    explicit RemoteEmbedder(RemoteProviderConfig cfg);

    const std::string& provider_id() const override { return provider_id_; }
    size_t dim() const override { return cfg_.dim; }
    std::vector<EmbeddingVector> embed_batch(std::span<const std::string> inputs) override;

private:
    std::vector<EmbeddingVector> request_batch(std::span<const std::string> inputs);

    RemoteProviderConfig cfg_;
    std::string provider_id_;
};

} // namespace georag::embed
