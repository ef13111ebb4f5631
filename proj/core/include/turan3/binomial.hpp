#pragma once

#include <cstdint>

namespace turan3 {

inline constexpr int kMaxVertices = 32;

constexpr std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Number of vertex triples on n labeled vertices.
constexpr int triple_count(int n) { return static_cast<int>(binom(n, 3)); }

inline constexpr int kMaxTriples = triple_count(kMaxVertices);

} // namespace turan3
