#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace oddcrit::detail {

// Visits every r-subset of {0..n-1} in lexicographic order. `visit` returns false to stop early.
// Returns false iff a visit stopped the walk.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t r, Visit&& visit) {
    if (r > n) return true;
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (!visit(std::span<const std::size_t>(idx))) return false;
        // advance to the next combination
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    long double acc = 1;
    for (std::size_t i = 1; i <= r; ++i) acc = acc * static_cast<long double>(n - r + i) / i;
    if (acc > 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(acc + 0.5L);
}

}  // namespace oddcrit::detail
