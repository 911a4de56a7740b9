#include "ramseylab/detect.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace ramseylab {

namespace {

// Backtracking embedder shared by the colored and uncolored searches.
// Pattern vertices are placed in a static order (maximum edge-degree first);
// an edge is checked as soon as its last vertex is placed.
struct Matcher {
    const Pattern& p;
    int host_n;
    int r;
    std::vector<int> order;                        // position -> pattern vertex
    std::vector<std::vector<std::vector<int>>> edges_at;  // position -> edges as position lists

    // host access
    const Coloring* coloring = nullptr;            // colored mode
    const std::vector<bool>* host_edges = nullptr; // uncolored mode

    std::vector<Vertex> placed;   // position -> host vertex
    std::vector<bool> used;       // host vertex -> taken
    std::vector<Vertex> scratch;

    std::uint64_t hits = 0;
    bool count_all = false;
    std::optional<Embedding> witness;

    Matcher(const Pattern& pattern, int n) : p(pattern), host_n(n), r(pattern.uniformity()) {
        const int pv = p.vertex_count();
        std::vector<int> degree(static_cast<std::size_t>(pv), 0);
        for (std::size_t e = 0; e < p.graph.edge_count(); ++e)
            for (Vertex v : p.graph.edge_vertices(e)) ++degree[static_cast<std::size_t>(v)];
        order.resize(static_cast<std::size_t>(pv));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });
        std::vector<int> pos_of(static_cast<std::size_t>(pv));
        for (int t = 0; t < pv; ++t) pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = t;

        edges_at.assign(static_cast<std::size_t>(pv), {});
        for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
            auto verts = p.graph.edge_vertices(e);
            std::vector<int> positions;
            positions.reserve(verts.size());
            int last = 0;
            for (Vertex v : verts) {
                positions.push_back(pos_of[static_cast<std::size_t>(v)]);
                last = std::max(last, pos_of[static_cast<std::size_t>(v)]);
            }
            edges_at[static_cast<std::size_t>(last)].push_back(std::move(positions));
        }

        placed.assign(static_cast<std::size_t>(pv), -1);
        used.assign(static_cast<std::size_t>(host_n), false);
        scratch.resize(static_cast<std::size_t>(r));
    }

    std::int32_t edge_value(const std::vector<int>& positions) {
        for (std::size_t i = 0; i < positions.size(); ++i)
            scratch[i] = placed[static_cast<std::size_t>(positions[i])];
        std::sort(scratch.begin(), scratch.end());
        std::uint64_t rank = colex_rank(scratch);
        if (coloring) return coloring->colors[rank];
        return (*host_edges)[rank] ? 1 : Coloring::kUnassigned;
    }

    // returns true to stop the search (first-witness mode)
    bool extend(int t, std::int32_t required) {
        const int pv = p.vertex_count();
        if (t == pv) {
            ++hits;
            if (!witness) {
                Embedding emb;
                emb.map.assign(static_cast<std::size_t>(pv), -1);
                for (int i = 0; i < pv; ++i)
                    emb.map[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
                        placed[static_cast<std::size_t>(i)];
                emb.color = coloring ? required : Embedding::kNoColor;
                witness = std::move(emb);
            }
            return !count_all;
        }
        for (Vertex h = 0; h < host_n; ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            placed[static_cast<std::size_t>(t)] = h;
            std::int32_t req = required;
            bool ok = true;
            for (const auto& positions : edges_at[static_cast<std::size_t>(t)]) {
                std::int32_t value = edge_value(positions);
                if (value == Coloring::kUnassigned || (req != Embedding::kNoColor && value != req)) {
                    ok = false;
                    break;
                }
                req = value;
            }
            if (ok) {
                used[static_cast<std::size_t>(h)] = true;
                if (extend(t + 1, req)) return true;
                used[static_cast<std::size_t>(h)] = false;
            }
        }
        placed[static_cast<std::size_t>(t)] = -1;
        return false;
    }
};

void check_uniformity(int host_r, const Pattern& p) {
    if (p.uniformity() != host_r)
        throw std::invalid_argument("pattern uniformity does not match host");
}

#ifndef NDEBUG
void recheck_witness(const Coloring& c, const Pattern& p, const Embedding& emb) {
    for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
        auto verts = p.graph.edge_vertices(e);
        for (auto& v : verts) v = emb.map[static_cast<std::size_t>(v)];
        std::sort(verts.begin(), verts.end());
        assert(c.color_of(verts) == emb.color);
    }
}
#endif

}  // namespace

std::optional<Embedding> find_mono_copy(const Coloring& c, const Pattern& p) {
    check_uniformity(c.r, p);
    if (!c.is_total())
        throw std::invalid_argument("find_mono_copy: coloring must be total");
    if (p.vertex_count() > c.n) return std::nullopt;
    Matcher m(p, c.n);
    m.coloring = &c;
    m.extend(0, Embedding::kNoColor);
#ifndef NDEBUG
    if (m.witness) recheck_witness(c, p, *m.witness);
#endif
    return m.witness;
}

std::uint64_t count_mono_copies(const Coloring& c, const Pattern& p) {
    check_uniformity(c.r, p);
    if (!c.is_total())
        throw std::invalid_argument("count_mono_copies: coloring must be total");
    if (p.vertex_count() > c.n) return 0;
    Matcher m(p, c.n);
    m.coloring = &c;
    m.count_all = true;
    m.extend(0, Embedding::kNoColor);
    assert(m.hits % p.automorphisms == 0);
    return m.hits / p.automorphisms;
}

std::optional<Embedding> contains_copy(const UniformHypergraph& host, const Pattern& p) {
    check_uniformity(host.r, p);
    if (p.vertex_count() > host.n) return std::nullopt;
    std::vector<bool> membership(static_cast<std::size_t>(binomial(host.n, host.r)), false);
    for (std::uint64_t rank : host.edges) membership[rank] = true;
    Matcher m(p, host.n);
    m.host_edges = &membership;
    m.extend(0, Embedding::kNoColor);
    return m.witness;
}

}  // namespace ramseylab
