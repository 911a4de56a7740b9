#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramseylab/combinatorics.hpp"

namespace ramseylab {

/// Exact nonnegative rational, always stored reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool operator==(const Rational&) const = default;
};

/// An r-uniform hypergraph on vertex set [0, n); edges are stored as sorted
/// colexicographic ranks, without duplicates.
struct UniformHypergraph {
    int r = 0;
    int n = 0;
    std::vector<std::uint64_t> edges;  // sorted colex ranks

    UniformHypergraph() = default;
    UniformHypergraph(int r_, int n_) : r(r_), n(n_) {
        if (r < 2) throw std::invalid_argument("UniformHypergraph: r must be >= 2");
        if (n < 0) throw std::invalid_argument("UniformHypergraph: negative n");
    }

    static UniformHypergraph from_edges(int r, int n,
                                        const std::vector<std::vector<Vertex>>& edge_list) {
        UniformHypergraph h(r, n);
        h.edges.reserve(edge_list.size());
        for (const auto& e : edge_list) {
            if (static_cast<int>(e.size()) != r)
                throw std::invalid_argument("UniformHypergraph: edge of wrong size");
            h.edges.push_back(colex_rank(e, n));
        }
        std::sort(h.edges.begin(), h.edges.end());
        if (std::adjacent_find(h.edges.begin(), h.edges.end()) != h.edges.end())
            throw std::invalid_argument("UniformHypergraph: duplicate edge");
        return h;
    }

    static UniformHypergraph complete(int r, int n) {
        UniformHypergraph h(r, n);
        std::uint64_t m = binomial(n, r);
        h.edges.resize(m);
        for (std::uint64_t i = 0; i < m; ++i) h.edges[i] = i;
        return h;
    }

    std::size_t edge_count() const { return edges.size(); }

    bool has_edge(std::uint64_t rank) const {
        return std::binary_search(edges.begin(), edges.end(), rank);
    }

    std::vector<Vertex> edge_vertices(std::size_t index) const {
        return colex_unrank(edges.at(index), r);
    }
};

/// d(H) = |E| / C(n, r), exact.
inline Rational density(const UniformHypergraph& h) {
    std::uint64_t total = binomial(h.n, h.r);
    if (total == 0) return h.edges.empty() ? Rational(0, 1) : throw std::logic_error("density: edges on empty host");
    return Rational(h.edges.size(), total);
}

}  // namespace ramseylab
