// Internal helpers shared by the remote embedding and chat clients.
#pragma once

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include <httplib.h>

#include <georag/errors.hpp>

namespace georag::http {

struct UrlParts {
    std::string origin;      // scheme://host[:port]
    std::string path_prefix; // e.g. "/v1"
};

inline UrlParts split_url(const std::string& base_url) {
    const auto scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos) {
        throw Error("base_url must include a scheme: " + base_url);
    }
    const auto path_start = base_url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {base_url, ""};
    std::string prefix = base_url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {base_url.substr(0, path_start), prefix};
}

inline httplib::Headers auth_headers(const std::string& auth_env) {
    httplib::Headers headers;
    if (!auth_env.empty()) {
        if (const char* token = std::getenv(auth_env.c_str()); token && *token) {
            headers.emplace("Authorization", std::string("Bearer ") + token);
        }
    }
    return headers;
}

inline bool retryable_status(int status) {
    return status == 429 || status >= 500;
}

inline httplib::Result post_with_retry(const UrlParts& url, const std::string& path,
                                       const httplib::Headers& headers, const std::string& body,
                                       size_t max_retries, int timeout_sec) {
    for (size_t attempt = 0;; ++attempt) {
        httplib::Client client(url.origin);
        client.set_connection_timeout(timeout_sec, 0);
        client.set_read_timeout(timeout_sec, 0);
        auto res =
            client.Post((url.path_prefix + path).c_str(), headers, body, "application/json");
        const bool retry = !res || retryable_status(res->status);
        if (!retry || attempt >= max_retries) return res;
        std::this_thread::sleep_for(std::chrono::milliseconds(100 * (attempt + 1)));
    }
}

} // namespace georag::http
