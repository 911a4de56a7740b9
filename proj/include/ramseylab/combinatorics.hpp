#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ramseylab {

using Vertex = int;

/// Exact binomial coefficient. Throws std::overflow_error if the value does
/// not fit in 64 bits; returns 0 for k > n.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is integral at every step
        unsigned __int128 next = static_cast<unsigned __int128>(result) * (n - k + i) / i;
        if (next > UINT64_MAX) throw std::overflow_error("binomial: value exceeds 64 bits");
        result = static_cast<std::uint64_t>(next);
    }
    return result;
}

/// Checks that s is a strictly increasing sequence of vertices in [0, n).
/// Pass n = -1 to skip the range check.
inline void validate_rsubset(std::span<const Vertex> s, int n = -1) {
    if (s.empty()) throw std::invalid_argument("r-subset: empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw std::invalid_argument("r-subset: negative vertex");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("r-subset: vertices not strictly increasing");
        if (n >= 0 && s[i] >= n) throw std::invalid_argument("r-subset: vertex out of range");
    }
}

/// Colexicographic rank of an r-subset: sum of binomial(s[i], i+1).
/// Bijective onto [0, C(n,r)) for subsets of [0, n).
inline std::uint64_t colex_rank(std::span<const Vertex> s, int n = -1) {
    validate_rsubset(s, n);
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        rank += binomial(static_cast<std::uint64_t>(s[i]), i + 1);
    return rank;
}

/// Inverse of colex_rank for uniformity r.
inline std::vector<Vertex> colex_unrank(std::uint64_t rank, int r) {
    if (r <= 0) throw std::invalid_argument("colex_unrank: r must be positive");
    std::vector<Vertex> s(static_cast<std::size_t>(r));
    for (int i = r; i >= 1; --i) {
        // largest m with C(m, i) <= rank; exponential probe then binary search
        std::uint64_t lo = static_cast<std::uint64_t>(i) - 1, hi = lo + 1;
        while (binomial(hi + 1, static_cast<std::uint64_t>(i)) <= rank) {
            lo = hi;
            hi = hi * 2 + 1;
        }
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (binomial(mid, static_cast<std::uint64_t>(i)) <= rank)
                lo = mid;
            else
                hi = mid - 1;
        }
        s[static_cast<std::size_t>(i - 1)] = static_cast<Vertex>(lo);
        rank -= binomial(lo, static_cast<std::uint64_t>(i));
    }
    return s;
}

/// Advances s to the colex successor among r-subsets of [0, n).
/// Returns false when s is already the last subset.
inline bool next_colex_subset(std::span<Vertex> s, int n) {
    const int r = static_cast<int>(s.size());
    for (int i = 0; i < r; ++i) {
        Vertex limit = (i + 1 < r) ? s[i + 1] : n;
        if (s[i] + 1 < limit) {
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j;
            return true;
        }
    }
    return false;
}

/// First r-subset in colex order: {0, 1, ..., r-1}.
inline std::vector<Vertex> first_colex_subset(int r) {
    std::vector<Vertex> s(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

/// All r-subsets of [0, n) in colex order, flattened (r entries per subset).
inline std::vector<Vertex> all_subsets_flat(int n, int r) {
    std::vector<Vertex> out;
    if (r > n) return out;
    out.reserve(static_cast<std::size_t>(binomial(n, r)) * static_cast<std::size_t>(r));
    auto s = first_colex_subset(r);
    do {
        out.insert(out.end(), s.begin(), s.end());
    } while (next_colex_subset(s, n));
    return out;
}

}  // namespace ramseylab
