#pragma once

#include <cstdint>
#include <string_view>

namespace georag {

/// FNV-1a 64-bit. Used for feature hashing, content hashes, and file
/// checksums; pinned here so values are identical across platforms and runs.
constexpr uint64_t kFnvOffset = 14695981039346656037ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

constexpr uint64_t fnv1a64_bytes(const void* data, size_t len, uint64_t seed = kFnvOffset) {
    uint64_t h = seed;
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

constexpr uint64_t fnv1a64(std::string_view s, uint64_t seed = kFnvOffset) {
    uint64_t h = seed;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

} // namespace georag
