#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramseylab/combinatorics.hpp"

namespace ramseylab {

/// A total or partial assignment of colors to all r-subsets of [0, n),
/// indexed by colex rank. Colors are 0-based and < k; unassigned entries
/// hold kUnassigned.
struct Coloring {
    static constexpr std::int32_t kUnassigned = -1;

    int r = 0;
    int n = 0;
    int k = 0;
    std::vector<std::int32_t> colors;  // length C(n, r)

    Coloring() = default;
    Coloring(int r_, int n_, int k_) : r(r_), n(n_), k(k_) {
        if (r < 2) throw std::invalid_argument("Coloring: r must be >= 2");
        if (n < 0) throw std::invalid_argument("Coloring: negative n");
        if (k < 1) throw std::invalid_argument("Coloring: need at least one color");
        colors.assign(static_cast<std::size_t>(binomial(n, r)), kUnassigned);
    }

    std::size_t edge_count() const { return colors.size(); }

    bool is_total() const {
        return std::find(colors.begin(), colors.end(), kUnassigned) == colors.end();
    }

    std::int32_t at(std::uint64_t rank) const { return colors.at(rank); }

    std::int32_t color_of(std::span<const Vertex> vertices) const {
        return colors.at(colex_rank(vertices, n));
    }

    void set(std::span<const Vertex> vertices, std::int32_t c) {
        if (c < 0 || c >= k) throw std::invalid_argument("Coloring: color out of range");
        colors.at(colex_rank(vertices, n)) = c;
    }

    /// Number of assigned edges per color.
    std::vector<std::uint64_t> class_sizes() const {
        std::vector<std::uint64_t> sizes(static_cast<std::size_t>(k), 0);
        for (std::int32_t c : colors)
            if (c != kUnassigned) ++sizes[static_cast<std::size_t>(c)];
        return sizes;
    }

    /// Edges of one color class, as a hypergraph on the same vertex set.
    std::vector<std::uint64_t> class_edges(std::int32_t c) const {
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < colors.size(); ++i)
            if (colors[i] == c) out.push_back(i);
        return out;
    }

    bool operator==(const Coloring&) const = default;
};

/// Trace of a triple coloring at vertex v: the pair coloring c'(ij) = c(ijv)
/// on the remaining n-1 vertices, relabeled 0..n-2 preserving order.
inline Coloring trace_at(const Coloring& c, Vertex v) {
    if (c.r != 3) throw std::invalid_argument("trace_at: requires r = 3");
    if (v < 0 || v >= c.n) throw std::invalid_argument("trace_at: vertex out of range");
    if (!c.is_total()) throw std::invalid_argument("trace_at: coloring must be total");
    Coloring out(2, c.n - 1, c.k);
    auto original = [v](Vertex x) { return x < v ? x : x + 1; };
    for (Vertex j = 1; j < c.n - 1; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            Vertex triple[3] = {original(i), original(j), v};
            std::sort(std::begin(triple), std::end(triple));
            Vertex pair[2] = {i, j};
            out.set(pair, c.color_of(triple));
        }
    }
    return out;
}

}  // namespace ramseylab
