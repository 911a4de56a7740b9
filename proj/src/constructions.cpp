#include "ramseylab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>
#include <stdexcept>

namespace ramseylab {

namespace {

// Materialized colorings are capped at this many edges; stepping-up hosts
// grow doubly exponentially and hit it long before the per-r vertex caps.
constexpr std::uint64_t kMaxHostEntries = std::uint64_t{1} << 28;

std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % bound;
}

std::vector<Vertex> fisher_yates(std::mt19937_64& gen, int n) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(bounded_draw(gen, static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return perm;
}

}  // namespace

Coloring stepping_up(const Coloring& phi) {
    const int r = phi.r;
    const int n = phi.n;
    if (n < r) throw std::invalid_argument("stepping_up: need n >= r");
    if (!phi.is_total()) throw std::invalid_argument("stepping_up: phi must be total");
    const int n_cap = (r == 2) ? 16 : 8;
    if (n > n_cap) throw std::invalid_argument("stepping_up: host 2^n exceeds the size cap");
    const std::uint64_t host_n = std::uint64_t{1} << n;
    if (binomial(host_n, static_cast<std::uint64_t>(r) + 1) > kMaxHostEntries)
        throw std::invalid_argument("stepping_up: host coloring would exceed the entry cap");

    const int k = phi.k;
    Coloring psi(r + 1, static_cast<int>(host_n), 2 * k + 2 * r - 4);

    // f(uv): 1-based index, counted from the most significant of the n
    // coordinates, of the first bit where u and v differ
    auto first_diff = [n](std::uint64_t u, std::uint64_t v) {
        return n - (std::bit_width(u ^ v) - 1);
    };

    std::vector<int> f(static_cast<std::size_t>(r));
    std::vector<Vertex> phi_edge(static_cast<std::size_t>(r));
    auto subset = first_colex_subset(r + 1);
    std::uint64_t rank = 0;
    do {
        for (int i = 0; i < r; ++i) {
            f[static_cast<std::size_t>(i)] =
                first_diff(static_cast<std::uint64_t>(subset[static_cast<std::size_t>(i)]),
                           static_cast<std::uint64_t>(subset[static_cast<std::size_t>(i + 1)]));
            assert(i == 0 || f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i - 1)]);
        }
        int run = 1;  // length of the initial monotone run
        const bool rising = f[0] < f[1];
        while (run < r &&
               (rising ? f[static_cast<std::size_t>(run - 1)] < f[static_cast<std::size_t>(run)]
                       : f[static_cast<std::size_t>(run - 1)] > f[static_cast<std::size_t>(run)]))
            ++run;
        std::int32_t color;
        if (run == r) {
            // monotone: the r first-diff indices are distinct; defer to phi
            for (int i = 0; i < r; ++i) phi_edge[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] - 1;
            std::sort(phi_edge.begin(), phi_edge.end());
            std::int32_t c = phi.color_of(phi_edge);
            color = rising ? c : k + c;
        } else {
            color = rising ? 2 * k + (run - 2) : 2 * k + (r - 2) + (run - 2);
        }
        psi.colors[rank] = color;
        ++rank;
    } while (next_colex_subset(subset, static_cast<int>(host_n)));
    return psi;
}

Coloring k43e_from_graph(const Coloring& phi) {
    if (phi.r != 2) throw std::invalid_argument("k43e_from_graph: phi must color pairs");
    if (!phi.is_total()) throw std::invalid_argument("k43e_from_graph: phi must be total");
    const int n = phi.n;
    const int k = phi.k;

    for (Vertex c = 2; c < n; ++c)
        for (Vertex b = 1; b < c; ++b)
            for (Vertex a = 0; a < b; ++a) {
                Vertex ab[2] = {a, b}, ac[2] = {a, c}, bc[2] = {b, c};
                if (phi.color_of(ab) == phi.color_of(ac) && phi.color_of(ab) == phi.color_of(bc))
                    throw std::invalid_argument("k43e_from_graph: phi has a monochromatic triangle");
            }

    Coloring psi(3, n, 4 * k);
    auto triple = first_colex_subset(3);
    std::uint64_t rank = 0;
    do {
        const Vertex i = triple[0], j = triple[1], kk = triple[2];
        Vertex ij[2] = {i, j}, ik[2] = {i, kk}, jk[2] = {j, kk};
        const std::int32_t a = phi.color_of(ij), b = phi.color_of(ik), c = phi.color_of(jk);
        std::int32_t type, remaining;
        if (a != b && a != c && b != c) {
            type = 0;
            remaining = c;  // pair of the two largest vertices
        } else if (a == b) {
            type = 1;  // path centered at i
            remaining = c;
        } else if (a == c) {
            type = 2;  // path centered at j
            remaining = b;
        } else {
            type = 3;  // path centered at k
            remaining = a;
        }
        psi.colors[rank] = type * k + remaining;
        ++rank;
    } while (next_colex_subset(triple, n));
    return psi;
}

Coloring sum_mod(int n, int m) {
    if (n < 3) throw std::invalid_argument("sum_mod: need n >= 3");
    if (m < 1) throw std::invalid_argument("sum_mod: need m >= 1");
    Coloring c(3, n, m);
    auto triple = first_colex_subset(3);
    std::uint64_t rank = 0;
    do {
        c.colors[rank] = (triple[0] + triple[1] + triple[2]) % m;
        ++rank;
    } while (next_colex_subset(triple, n));
    return c;
}

Coloring kneser_matching_coloring(int r, int k) {
    if (r < 2) throw std::invalid_argument("kneser_matching_coloring: need r >= 2");
    if (k < 1) throw std::invalid_argument("kneser_matching_coloring: need k >= 1");
    const int n = k + 2 * r - 2;
    Coloring c(r, n, k);
    auto subset = first_colex_subset(r);
    std::uint64_t rank = 0;
    do {
        c.colors[rank] = std::min(subset[0], k - 1);
        ++rank;
    } while (next_colex_subset(subset, n));
    return c;
}

RandomCoverResult random_cover(const CoverSpec& spec) {
    RandomCoverResult result;
    if (spec.k < 1) throw std::invalid_argument("random_cover: need k >= 1");
    if (spec.base.edges.empty()) return result;  // nothing can ever be covered

    const int n = spec.base.n;
    const int r = spec.base.r;
    const std::uint64_t m = binomial(n, r);
    std::vector<std::vector<Vertex>> base_edges;
    base_edges.reserve(spec.base.edge_count());
    for (std::size_t e = 0; e < spec.base.edge_count(); ++e)
        base_edges.push_back(spec.base.edge_vertices(e));

    std::mt19937_64 gen(spec.seed);
    std::vector<Vertex> image(static_cast<std::size_t>(r));
    for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
        ++result.attempts;
        Coloring c(r, n, spec.k);
        std::uint64_t unassigned = m;
        for (int copy = 0; copy < spec.k; ++copy) {
            auto perm = fisher_yates(gen, n);
            for (const auto& edge : base_edges) {
                for (std::size_t i = 0; i < edge.size(); ++i)
                    image[i] = perm[static_cast<std::size_t>(edge[i])];
                std::sort(image.begin(), image.end());
                auto& slot = c.colors[colex_rank(image)];
                if (slot == Coloring::kUnassigned) {
                    slot = copy;
                    --unassigned;
                }
            }
        }
        if (unassigned == 0) {
            result.coloring = std::move(c);
            return result;
        }
    }
    return result;
}

UniformHypergraph balanced_rpartite(int n, int r) {
    if (r < 2) throw std::invalid_argument("balanced_rpartite: need r >= 2");
    if (n < r) throw std::invalid_argument("balanced_rpartite: need n >= r");
    // contiguous parts; the first n mod r parts take the extra vertex
    std::vector<std::pair<Vertex, Vertex>> parts;
    Vertex start = 0;
    for (int p = 0; p < r; ++p) {
        Vertex size = n / r + (p < n % r ? 1 : 0);
        parts.emplace_back(start, start + size);
        start += size;
    }
    std::vector<std::vector<Vertex>> edge_list;
    std::vector<Vertex> pick(static_cast<std::size_t>(r));
    for (int p = 0; p < r; ++p) pick[static_cast<std::size_t>(p)] = parts[static_cast<std::size_t>(p)].first;
    while (true) {
        edge_list.push_back(pick);
        int p = r - 1;
        while (p >= 0 && pick[static_cast<std::size_t>(p)] + 1 >= parts[static_cast<std::size_t>(p)].second) {
            pick[static_cast<std::size_t>(p)] = parts[static_cast<std::size_t>(p)].first;
            --p;
        }
        if (p < 0) break;
        ++pick[static_cast<std::size_t>(p)];
    }
    return UniformHypergraph::from_edges(r, n, edge_list);
}

UniformHypergraph pasch_free_host(int q) {
    if (q != 2 && q != 3) throw std::invalid_argument("pasch_free_host: supported q are 2 and 3");
    // projective plane over the prime field of order q; points and lines are
    // the nonzero coordinate triples normalized to leading coefficient 1
    std::vector<std::array<int, 3>> points;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) points.push_back({1, x, y});
    for (int y = 0; y < q; ++y) points.push_back({0, 1, y});
    points.push_back({0, 0, 1});
    const int n = static_cast<int>(points.size());
    assert(n == q * q + q + 1);

    auto incident = [q](const std::array<int, 3>& p, const std::array<int, 3>& line) {
        return (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0;
    };

    std::vector<std::vector<Vertex>> edge_list;
    for (int apex = 0; apex < n; ++apex)
        for (int pi = 0; pi < n; ++pi)
            for (int li = 0; li < n; ++li)
                if (incident(points[static_cast<std::size_t>(pi)], points[static_cast<std::size_t>(li)]))
                    edge_list.push_back({pi, n + li, 2 * n + apex});
    return UniformHypergraph::from_edges(3, 3 * n, edge_list);
}

Coloring k5_two_cycle_coloring() {
    Coloring c(2, 5, 2);
    for (Vertex j = 1; j < 5; ++j)
        for (Vertex i = 0; i < j; ++i) {
            Vertex pair[2] = {i, j};
            bool on_cycle = (j - i == 1) || (i == 0 && j == 4);
            c.set(pair, on_cycle ? 0 : 1);
        }
    return c;
}

namespace {

Coloring certificate_bow_k3_n5() {
    Coloring c(3, 5, 3);
    auto triple = first_colex_subset(3);
    std::uint64_t rank = 0;
    do {
        if (triple[2] <= 3)
            c.colors[rank] = 0;  // triples inside {0,1,2,3}
        else if (triple[1] <= 2)
            c.colors[rank] = 1;  // {x,y,4} with x,y in {0,1,2}
        else
            c.colors[rank] = 2;  // {x,3,4}
        ++rank;
    } while (next_colex_subset(triple, 5));
    return c;
}

Coloring certificate_bow_k6_n6() {
    // two full K_4^3 classes and four K_4^3-minus-one-edge classes
    Coloring c(3, 6, 6);
    auto assign = [&c](std::initializer_list<std::initializer_list<Vertex>> triples, std::int32_t color) {
        for (auto t : triples) {
            std::vector<Vertex> v(t);
            c.set(v, color);
        }
    };
    assign({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 0);
    assign({{2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}, 1);
    assign({{0, 3, 4}, {0, 3, 5}, {0, 4, 5}}, 2);
    assign({{1, 3, 4}, {1, 3, 5}, {1, 4, 5}}, 3);
    assign({{0, 1, 4}, {0, 2, 4}, {1, 2, 4}}, 4);
    assign({{0, 1, 5}, {0, 2, 5}, {1, 2, 5}}, 5);
    return c;
}

Coloring certificate_kite_k6_n7() {
    // partition of the triples of [7] into six linear classes: two Fano
    // planes (cyclic shifts of {0,1,3} and {0,2,3}), two Fano minus a line,
    // one Fano minus two lines, one Pasch configuration. The source labels
    // the classes F1,F2,F3,F4,F6,F7; colors 0..5 follow that order.
    Coloring c(3, 7, 6);
    for (int shift = 0; shift < 7; ++shift) {
        std::vector<Vertex> f1 = {shift % 7, (1 + shift) % 7, (3 + shift) % 7};
        std::vector<Vertex> f2 = {shift % 7, (2 + shift) % 7, (3 + shift) % 7};
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());
        c.set(f1, 0);
        c.set(f2, 1);
    }
    auto assign = [&c](std::initializer_list<std::initializer_list<Vertex>> triples, std::int32_t color) {
        for (auto t : triples) {
            std::vector<Vertex> v(t);
            c.set(v, color);
        }
    };
    assign({{0, 2, 4}, {0, 5, 6}, {1, 2, 5}, {1, 4, 6}, {2, 3, 6}, {3, 4, 5}}, 2);
    assign({{0, 1, 2}, {0, 3, 5}, {1, 3, 6}, {1, 4, 5}, {2, 3, 4}, {2, 5, 6}}, 3);
    assign({{0, 1, 6}, {0, 2, 5}, {0, 3, 4}, {1, 3, 5}, {4, 5, 6}}, 4);
    assign({{0, 1, 4}, {0, 3, 6}, {1, 2, 3}, {2, 4, 6}}, 5);
    return c;
}

Coloring certificate_f5_k2_n5() {
    Coloring c(3, 5, 2);
    auto triple = first_colex_subset(3);
    std::uint64_t rank = 0;
    do {
        c.colors[rank] = triple[0] == 0 ? 0 : 1;
        ++rank;
    } while (next_colex_subset(triple, 5));
    return c;
}

Coloring certificate_f5_k3_n6() {
    // nested stars: triples through vertex 0, then through vertex 1, rest
    Coloring c(3, 6, 3);
    auto triple = first_colex_subset(3);
    std::uint64_t rank = 0;
    do {
        c.colors[rank] = triple[0] == 0 ? 0 : (triple[0] == 1 ? 1 : 2);
        ++rank;
    } while (next_colex_subset(triple, 6));
    return c;
}

Coloring certificate_k43e_k2_n6() {
    // pairs of [0,5) carry the two-5-cycle coloring; a triple through vertex
    // 5 copies its pair color, a triple inside [0,5) takes the color opposite
    // to its complementary pair
    const Coloring pairs = k5_two_cycle_coloring();
    Coloring c(3, 6, 2);
    auto triple = first_colex_subset(3);
    std::uint64_t rank = 0;
    do {
        if (triple[2] == 5) {
            Vertex uw[2] = {triple[0], triple[1]};
            c.colors[rank] = pairs.color_of(uw);
        } else {
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < 5; ++v)
                if (v != triple[0] && v != triple[1] && v != triple[2]) rest.push_back(v);
            c.colors[rank] = 1 - pairs.color_of(rest);
        }
        ++rank;
    } while (next_colex_subset(triple, 6));
    return c;
}

}  // namespace

Coloring certificate(std::string_view name) {
    if (name == "bow_k3_n5") return certificate_bow_k3_n5();
    if (name == "bow_k6_n6") return certificate_bow_k6_n6();
    if (name == "kite_k6_n7") return certificate_kite_k6_n7();
    if (name == "f5_k2_n5") return certificate_f5_k2_n5();
    if (name == "f5_k3_n6") return certificate_f5_k3_n6();
    if (name == "k43e_k2_n6") return certificate_k43e_k2_n6();
    throw std::invalid_argument("certificate: unknown name '" + std::string(name) + "'");
}

std::vector<CertificateInfo> certificate_catalog() {
    return {
        {"bow_k3_n5", "bow", 3, 5, "K_4^3 plus two stars through the last vertex"},
        {"bow_k6_n6", "bow", 6, 6, "two K_4^3 classes and four K_4^3-minus-an-edge classes"},
        {"kite_k6_n7", "kite", 6, 7, "partition of the triples of [7] into six linear classes"},
        {"f5_k2_n5", "F5", 2, 5, "star through one vertex plus the remaining K_4^3"},
        {"f5_k3_n6", "F5", 3, 6, "nested stars through two vertices plus the remaining K_4^3"},
        {"k43e_k2_n6", "K43e", 2, 6, "two-5-cycle pair coloring extended to triples"},
    };
}

}  // namespace ramseylab
