// Independent reference implementations used only by tests. These avoid the
// library's enumeration and detection code paths on purpose: subsets come
// from bitmask scans, copies from full injection enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Edge = std::vector<int>;       // sorted vertices
using EdgeSet = std::set<Edge>;

// all r-subsets of [0,n) in colex order (largest element most significant)
inline std::vector<Edge> colex_subsets(int n, int r) {
    std::vector<Edge> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        Edge e;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) e.push_back(v);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

// all copies of the pattern in the complete host, as sets of edges
inline std::set<EdgeSet> copies_in_complete_host(const std::vector<Edge>& pattern_edges,
                                                 int pattern_vertices, int host_n) {
    std::set<EdgeSet> copies;
    std::vector<int> map(pattern_vertices, -1);
    std::vector<bool> used(host_n, false);
    auto rec = [&](auto&& self, int t) -> void {
        if (t == pattern_vertices) {
            EdgeSet image;
            for (const Edge& e : pattern_edges) {
                Edge im;
                for (int v : e) im.push_back(map[v]);
                std::sort(im.begin(), im.end());
                image.insert(std::move(im));
            }
            copies.insert(std::move(image));
            return;
        }
        for (int h = 0; h < host_n; ++h) {
            if (used[h]) continue;
            used[h] = true;
            map[t] = h;
            self(self, t + 1);
            used[h] = false;
        }
    };
    if (pattern_vertices <= host_n) rec(rec, 0);
    return copies;
}

// monochromatic copies of the pattern in a colored complete host; the
// coloring maps each edge (sorted vertex list) to its color
inline std::set<EdgeSet> mono_copies(const std::map<Edge, int>& coloring,
                                     const std::vector<Edge>& pattern_edges, int pattern_vertices,
                                     int host_n) {
    std::set<EdgeSet> result;
    for (const EdgeSet& copy : copies_in_complete_host(pattern_edges, pattern_vertices, host_n)) {
        int common = -1;
        bool mono = true;
        for (const Edge& e : copy) {
            int c = coloring.at(e);
            if (common == -1) common = c;
            if (c != common) {
                mono = false;
                break;
            }
        }
        if (mono) result.insert(copy);
    }
    return result;
}

// does the edge set contain a copy of the pattern?
inline bool contains(const EdgeSet& host_edges, const std::vector<Edge>& pattern_edges,
                     int pattern_vertices, int host_n) {
    for (const EdgeSet& copy : copies_in_complete_host(pattern_edges, pattern_vertices, host_n)) {
        bool inside = true;
        for (const Edge& e : copy)
            if (!host_edges.count(e)) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

// exact Turan number by scanning all edge subsets (C(n,3) <= 20 or so)
inline int turan_by_enumeration(const std::vector<Edge>& pattern_edges, int pattern_vertices,
                                int host_n, int r) {
    auto host = colex_subsets(host_n, r);
    const int m = static_cast<int>(host.size());
    std::map<Edge, int> index;
    for (int i = 0; i < m; ++i) index[host[i]] = i;
    std::vector<std::uint32_t> copy_masks;
    for (const EdgeSet& copy : copies_in_complete_host(pattern_edges, pattern_vertices, host_n)) {
        std::uint32_t mask = 0;
        for (const Edge& e : copy) mask |= std::uint32_t{1} << index[e];
        copy_masks.push_back(mask);
    }
    int best = 0;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
        if (std::popcount(subset) <= best) continue;
        bool free = true;
        for (std::uint32_t cm : copy_masks)
            if ((subset & cm) == cm) {
                free = false;
                break;
            }
        if (free) best = std::popcount(subset);
    }
    return best;
}

}  // namespace oracle
