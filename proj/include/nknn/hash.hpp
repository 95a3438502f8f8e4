#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nknn {

// Deterministic 64-bit mixing used everywhere a seeded pseudo-random value
// is needed. Keeping this self-contained guarantees identical output across
// platforms and compilers, which the datastore fingerprint relies on.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t h, uint64_t v) {
    return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline uint64_t hash_tokens(uint64_t h, std::span<const int32_t> tokens) {
    for (int32_t t : tokens) {
        h = hash_combine(h, static_cast<uint64_t>(static_cast<uint32_t>(t)) + 1);
    }
    return hash_combine(h, tokens.size());
}

// Uniform float in [-1, 1), bit-reproducible.
inline float hash_unit_float(uint64_t h) {
    const double u = static_cast<double>(splitmix64(h) >> 11) * (1.0 / 9007199254740992.0);
    return static_cast<float>(2.0 * u - 1.0);
}

// FNV-1a over raw bytes; used for file hashes in run manifests.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace nknn
