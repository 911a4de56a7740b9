#include "ramseylab/pattern.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ramseylab {

namespace {

constexpr int kMaxPatternVertices = 8;

Pattern make_pattern(std::string_view name, int r, int n,
                     std::vector<std::vector<Vertex>> edge_list, std::uint64_t automorphisms,
                     std::vector<int> params = {}) {
    if (n > kMaxPatternVertices)
        throw std::invalid_argument("pattern_catalog: patterns are limited to 8 vertices");
    Pattern p;
    p.name = std::string(name);
    p.params = std::move(params);
    p.graph = UniformHypergraph::from_edges(r, n, edge_list);
    p.automorphisms = automorphisms;
    return p;
}

std::uint64_t factorial(int s) {
    std::uint64_t f = 1;
    for (int i = 2; i <= s; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

int param(std::span<const int> params, std::size_t i, std::string_view what) {
    if (i >= params.size())
        throw std::invalid_argument("pattern_catalog: missing parameter " + std::string(what));
    return params[i];
}

}  // namespace

std::uint64_t brute_force_automorphisms(const UniformHypergraph& g) {
    if (g.n > kMaxPatternVertices)
        throw std::invalid_argument("brute_force_automorphisms: too many vertices");
    std::set<std::uint64_t> edge_set(g.edges.begin(), g.edges.end());
    std::vector<Vertex> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t e = 0; ok && e < g.edges.size(); ++e) {
            auto verts = colex_unrank(g.edges[e], g.r);
            for (auto& v : verts) v = perm[static_cast<std::size_t>(v)];
            std::sort(verts.begin(), verts.end());
            ok = edge_set.count(colex_rank(verts)) > 0;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Pattern pattern_catalog(std::string_view name, std::span<const int> params) {
    if (name == "bow") {
        // two triples sharing exactly one vertex
        return make_pattern(name, 3, 5, {{0, 1, 2}, {0, 3, 4}}, 8);
    }
    if (name == "kite") {
        // two triples sharing two vertices
        return make_pattern(name, 3, 4, {{0, 1, 2}, {0, 1, 3}}, 4);
    }
    if (name == "matching2") {
        int r = params.empty() ? 3 : param(params, 0, "r");
        if (r < 2) throw std::invalid_argument("matching2: r must be >= 2");
        std::vector<Vertex> a(static_cast<std::size_t>(r)), b(static_cast<std::size_t>(r));
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), r);
        return make_pattern(name, r, 2 * r, {a, b}, 2 * factorial(r) * factorial(r), {r});
    }
    if (name == "F5") {
        // edges {abc, abd, cde}
        return make_pattern(name, 3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}, 4);
    }
    if (name == "K43e") {
        // complete triple system on 4 vertices minus one edge
        return make_pattern(name, 3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}, 6);
    }
    if (name == "clique") {
        int s = param(params, 0, "s");
        int r = param(params, 1, "r");
        if (r < 2 || s <= r) throw std::invalid_argument("clique: need s > r >= 2");
        std::vector<std::vector<Vertex>> edge_list;
        auto sub = first_colex_subset(r);
        do {
            edge_list.push_back(sub);
        } while (next_colex_subset(sub, s));
        return make_pattern("clique", r, s, std::move(edge_list), factorial(s), {s, r});
    }
    if (name == "C33") {
        // edges {abc, cde, efa}: a loose triangle
        return make_pattern(name, 3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, 6);
    }
    if (name == "windmill") {
        // center edge abc plus abd, bce, acf
        return make_pattern(name, 3, 6, {{0, 1, 2}, {0, 1, 3}, {1, 2, 4}, {0, 2, 5}}, 6);
    }
    if (name == "tightpath") {
        // P_3^3 = {abc, bcd, cde}
        return make_pattern(name, 3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, 2);
    }
    if (name == "pasch") {
        // {abc, bde, cef, adf}: the Fano plane minus a point
        return make_pattern(name, 3, 6, {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}, {0, 3, 5}}, 24);
    }
    if (name == "F") {
        // all triples with one vertex in A = [0,a) and two in B = [a,a+b)
        int a = param(params, 0, "a");
        int b = param(params, 1, "b");
        if (a < 1 || b < 2) throw std::invalid_argument("F(a,b): need a >= 1, b >= 2");
        std::vector<std::vector<Vertex>> edge_list;
        for (Vertex x = 0; x < a; ++x)
            for (Vertex i = 0; i < b; ++i)
                for (Vertex j = i + 1; j < b; ++j) {
                    std::vector<Vertex> e = {x, a + i, a + j};
                    std::sort(e.begin(), e.end());
                    edge_list.push_back(std::move(e));
                }
        // group order computed exhaustively: degenerate parameters (e.g. F(1,2)
        // is a single edge) break the a!*b! pattern
        Pattern p = make_pattern("F", 3, a + b, std::move(edge_list), 1, {a, b});
        p.automorphisms = brute_force_automorphisms(p.graph);
        return p;
    }
    if (name == "Hr") {
        // complete r-partite r-uniform: r-2 singleton parts, parts of size s, t
        int r = param(params, 0, "r");
        int s = param(params, 1, "s");
        int t = param(params, 2, "t");
        if (r < 2 || s < 1 || t < 1) throw std::invalid_argument("Hr: need r >= 2, s,t >= 1");
        std::vector<Vertex> singletons(static_cast<std::size_t>(r - 2));
        std::iota(singletons.begin(), singletons.end(), 0);
        std::vector<std::vector<Vertex>> edge_list;
        for (Vertex i = 0; i < s; ++i)
            for (Vertex j = 0; j < t; ++j) {
                std::vector<Vertex> e = singletons;
                e.push_back(r - 2 + i);
                e.push_back(r - 2 + s + j);
                std::sort(e.begin(), e.end());
                edge_list.push_back(std::move(e));
            }
        Pattern p = make_pattern("Hr", r, r - 2 + s + t, std::move(edge_list), 1, {r, s, t});
        p.automorphisms = brute_force_automorphisms(p.graph);
        return p;
    }
    throw std::invalid_argument("pattern_catalog: unknown pattern '" + std::string(name) + "'");
}

Pattern parse_pattern(std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos) return pattern_catalog(text);
    if (text.back() != ')')
        throw std::invalid_argument("parse_pattern: expected closing ')' in '" + std::string(text) + "'");
    std::string_view name = text.substr(0, open);
    std::string_view args = text.substr(open + 1, text.size() - open - 2);
    std::vector<int> params;
    while (!args.empty()) {
        auto comma = args.find(',');
        std::string_view tok = args.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("parse_pattern: bad parameter '" + std::string(tok) + "'");
        params.push_back(value);
        args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
    }
    return pattern_catalog(name, params);
}

std::vector<std::string> pattern_names() {
    return {"bow",  "kite",     "matching2", "F5",    "K43e", "clique(s,r)",
            "C33",  "windmill", "tightpath", "pasch", "F(a,b)", "Hr(r,s,t)"};
}

}  // namespace ramseylab
