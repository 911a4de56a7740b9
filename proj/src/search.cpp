#include "ramseylab/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "ramseylab/constructions.hpp"
#include "ramseylab/designs.hpp"

namespace ramseylab {

std::vector<std::vector<std::uint32_t>> pattern_copies_in_host(const Pattern& p, int n) {
    std::set<std::vector<std::uint32_t>> copies;
    const int pv = p.vertex_count();
    if (pv > n) return {};
    std::vector<std::vector<Vertex>> pattern_edges;
    for (std::size_t e = 0; e < p.graph.edge_count(); ++e)
        pattern_edges.push_back(p.graph.edge_vertices(e));

    std::vector<Vertex> map(static_cast<std::size_t>(pv), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<Vertex> image(static_cast<std::size_t>(p.graph.r));
    auto place = [&](auto&& self, int t) -> void {
        if (t == pv) {
            std::vector<std::uint32_t> ranks;
            ranks.reserve(pattern_edges.size());
            for (const auto& e : pattern_edges) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    image[i] = map[static_cast<std::size_t>(e[i])];
                std::sort(image.begin(), image.end());
                ranks.push_back(static_cast<std::uint32_t>(colex_rank(image)));
            }
            std::sort(ranks.begin(), ranks.end());
            copies.insert(std::move(ranks));
            return;
        }
        for (Vertex h = 0; h < n; ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            used[static_cast<std::size_t>(h)] = true;
            map[static_cast<std::size_t>(t)] = h;
            self(self, t + 1);
            used[static_cast<std::size_t>(h)] = false;
        }
    };
    place(place, 0);
    return {copies.begin(), copies.end()};
}

namespace {

// copies grouped by their largest edge, others flattened with fixed stride
struct CompletionTable {
    int stride = 0;  // pattern edge count - 1
    std::vector<std::uint32_t> offsets;  // per edge: first copy slot; size m+1
    std::vector<std::uint32_t> others;   // stride entries per copy

    CompletionTable(const std::vector<std::vector<std::uint32_t>>& copies, std::uint32_t m,
                    int pattern_edges) {
        stride = pattern_edges - 1;
        std::vector<std::vector<std::uint32_t>> by_last(m);
        for (const auto& copy : copies) {
            std::uint32_t last = copy.back();
            for (std::uint32_t e : copy)
                if (e != last) by_last[last].push_back(e);
        }
        offsets.assign(m + 1, 0);
        for (std::uint32_t e = 0; e < m; ++e)
            offsets[e + 1] = offsets[e] + static_cast<std::uint32_t>(by_last[e].size() / static_cast<std::size_t>(stride));
        others.reserve(static_cast<std::size_t>(offsets[m]) * static_cast<std::size_t>(stride));
        for (std::uint32_t e = 0; e < m; ++e)
            others.insert(others.end(), by_last[e].begin(), by_last[e].end());
    }
};

struct ColoringDfs {
    const CompletionTable& table;
    int m, k;
    std::uint64_t budget;
    std::vector<std::int8_t> colors;
    std::uint64_t nodes = 0;
    bool exceeded = false;
    bool found = false;

    ColoringDfs(const CompletionTable& t, int m_, int k_, std::uint64_t budget_)
        : table(t), m(m_), k(k_), budget(budget_), colors(static_cast<std::size_t>(m_), -1) {}

    bool completes_mono(int e, std::int8_t c) const {
        const std::uint32_t* data = table.others.data();
        const int stride = table.stride;
        for (std::uint32_t slot = table.offsets[static_cast<std::size_t>(e)];
             slot < table.offsets[static_cast<std::size_t>(e) + 1]; ++slot) {
            const std::uint32_t* copy = data + static_cast<std::size_t>(slot) * static_cast<std::size_t>(stride);
            bool all = true;
            for (int i = 0; i < stride; ++i)
                if (colors[copy[i]] != c) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }

    bool run(int e, int max_used) {
        if (e == m) {
            found = true;
            return true;
        }
        const int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (completes_mono(e, static_cast<std::int8_t>(c))) continue;
            colors[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(c);
            if (run(e + 1, std::max(max_used, c))) return true;
            if (exceeded) return false;
        }
        colors[static_cast<std::size_t>(e)] = -1;
        return false;
    }

    // collects every viable prefix of the given depth instead of descending
    void collect_prefixes(int e, int max_used, int depth,
                          std::vector<std::vector<std::int8_t>>& out) {
        if (e == depth) {
            out.emplace_back(colors.begin(), colors.begin() + depth);
            return;
        }
        const int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            ++nodes;
            if (completes_mono(e, static_cast<std::int8_t>(c))) continue;
            colors[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(c);
            collect_prefixes(e + 1, std::max(max_used, c), depth, out);
        }
        colors[static_cast<std::size_t>(e)] = -1;
    }
};

Coloring coloring_from_int8(const std::vector<std::int8_t>& colors, int r, int n, int k) {
    Coloring out(r, n, k);
    for (std::size_t i = 0; i < colors.size(); ++i) out.colors[i] = colors[i];
    return out;
}

}  // namespace

SearchOutcome exists_good_coloring(const Pattern& p, int k, int n, std::uint64_t budget,
                                   int threads) {
    if (k < 1 || k > 127) throw std::invalid_argument("exists_good_coloring: k out of range");
    if (n < p.uniformity()) throw std::invalid_argument("exists_good_coloring: host too small");
    if (threads < 1) throw std::invalid_argument("exists_good_coloring: bad thread count");

    const std::uint64_t m64 = binomial(n, p.uniformity());
    if (m64 > 4096) throw std::invalid_argument("exists_good_coloring: host too large");
    const int m = static_cast<int>(m64);
    const auto copies = pattern_copies_in_host(p, n);
    const CompletionTable table(copies, static_cast<std::uint32_t>(m),
                                static_cast<int>(p.graph.edge_count()));

    SearchOutcome outcome;
    auto finish_found = [&](const std::vector<std::int8_t>& colors) {
        Coloring c = coloring_from_int8(colors, p.uniformity(), n, k);
        if (find_mono_copy(c, p))  // soundness gate, always on
            throw std::logic_error("exists_good_coloring: certificate failed verification");
        outcome.certificate = std::move(c);
        outcome.status = SearchStatus::Found;
    };

    if (threads == 1 || m == 0) {
        ColoringDfs dfs(table, m, k, budget);
        dfs.run(0, -1);
        outcome.nodes_explored = dfs.nodes;
        if (dfs.found)
            finish_found(dfs.colors);
        else
            outcome.status = dfs.exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
        return outcome;
    }

    // root split: enumerate viable prefixes, give each an equal budget share
    const int max_depth = std::min(m, 16);
    int depth = 1;
    std::vector<std::vector<std::int8_t>> prefixes;
    ColoringDfs splitter(table, m, k, budget);
    while (true) {
        prefixes.clear();
        splitter.nodes = 0;
        splitter.collect_prefixes(0, -1, depth, prefixes);
        if (depth == max_depth || static_cast<int>(prefixes.size()) >= 8 * threads) break;
        ++depth;
    }
    outcome.nodes_explored = splitter.nodes;
    if (prefixes.empty()) {
        outcome.status = SearchStatus::NotFound;
        return outcome;
    }
    if (depth == m) {
        finish_found(prefixes.front());
        return outcome;
    }

    const std::uint64_t share = budget / prefixes.size();
    struct SubResult {
        bool found = false;
        bool exceeded = false;
        std::vector<std::int8_t> colors;
        std::uint64_t nodes = 0;
    };
    std::vector<SubResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            ColoringDfs dfs(table, m, k, i == 0 ? share + budget % prefixes.size() : share);
            int max_used = -1;
            for (int e = 0; e < depth; ++e) {
                dfs.colors[static_cast<std::size_t>(e)] = prefixes[i][static_cast<std::size_t>(e)];
                max_used = std::max(max_used, static_cast<int>(prefixes[i][static_cast<std::size_t>(e)]));
            }
            dfs.run(depth, max_used);
            results[i] = {dfs.found, dfs.exceeded, dfs.colors, dfs.nodes};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    bool any_exceeded = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        outcome.nodes_explored += results[i].nodes;
        any_exceeded = any_exceeded || results[i].exceeded;
    }
    for (std::size_t i = 0; i < results.size(); ++i)
        if (results[i].found) {
            finish_found(results[i].colors);
            return outcome;
        }
    outcome.status = any_exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    return outcome;
}

TuranResult turan_number(const Pattern& p, int n, std::uint64_t budget) {
    if (n < p.uniformity()) throw std::invalid_argument("turan_number: host too small");
    const std::uint64_t m64 = binomial(n, p.uniformity());
    if (m64 > 4096) throw std::invalid_argument("turan_number: host too large");
    const int m = static_cast<int>(m64);
    const auto copies = pattern_copies_in_host(p, n);

    // branch on edges in descending copy-degree order (fail-first)
    std::vector<std::uint32_t> degree(static_cast<std::size_t>(m), 0);
    for (const auto& copy : copies)
        for (std::uint32_t e : copy) ++degree[e];
    std::vector<std::uint32_t> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return degree[a] > degree[b]; });
    std::vector<std::uint32_t> pos_of(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pos_of[order[static_cast<std::size_t>(i)]] = static_cast<std::uint32_t>(i);

    std::vector<std::vector<std::uint32_t>> repositioned;
    repositioned.reserve(copies.size());
    for (const auto& copy : copies) {
        std::vector<std::uint32_t> c;
        c.reserve(copy.size());
        for (std::uint32_t e : copy) c.push_back(pos_of[e]);
        std::sort(c.begin(), c.end());
        repositioned.push_back(std::move(c));
    }
    const CompletionTable table(repositioned, static_cast<std::uint32_t>(m),
                                static_cast<int>(p.graph.edge_count()));

    std::vector<char> in(static_cast<std::size_t>(m), 0);
    std::vector<char> best_in(static_cast<std::size_t>(m), 0);
    int best = -1;
    std::uint64_t nodes = 0;
    bool exceeded = false;

    auto completes = [&](int pos) {
        const std::uint32_t* data = table.others.data();
        const int stride = table.stride;
        for (std::uint32_t slot = table.offsets[static_cast<std::size_t>(pos)];
             slot < table.offsets[static_cast<std::size_t>(pos) + 1]; ++slot) {
            const std::uint32_t* copy = data + static_cast<std::size_t>(slot) * static_cast<std::size_t>(stride);
            bool all = true;
            for (int i = 0; i < stride; ++i)
                if (!in[copy[i]]) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, int pos, int count) -> void {
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        if (count + (m - pos) <= best) return;
        if (pos == m) {
            best = count;
            best_in = in;
            return;
        }
        if (!completes(pos)) {
            in[static_cast<std::size_t>(pos)] = 1;
            self(self, pos + 1, count + 1);
            in[static_cast<std::size_t>(pos)] = 0;
            if (exceeded) return;
        }
        self(self, pos + 1, count);
    };
    dfs(dfs, 0, 0);

    TuranResult result;
    result.nodes = nodes;
    result.exact = !exceeded;
    result.value = static_cast<std::uint64_t>(std::max(best, 0));
    result.witness = UniformHypergraph(p.uniformity(), n);
    for (int i = 0; i < m; ++i)
        if (best_in[static_cast<std::size_t>(i)])
            result.witness.edges.push_back(order[static_cast<std::size_t>(i)]);
    std::sort(result.witness.edges.begin(), result.witness.edges.end());
    if (contains_copy(result.witness, p))  // witness gate, always on
        throw std::logic_error("turan_number: witness contains the pattern");
    return result;
}

PigeonholeBound ramsey_upper_from_turan(const Pattern& p, int k, int n_cap,
                                        std::uint64_t budget_per_host) {
    if (k < 1) throw std::invalid_argument("ramsey_upper_from_turan: need k >= 1");
    PigeonholeBound out;
    for (int n = p.uniformity(); n <= n_cap; ++n) {
        TuranResult tr = turan_number(p, n, budget_per_host);
        if (!tr.exact) continue;  // cannot certify anything at this host
        out.table.emplace_back(n, tr.value);
        const std::uint64_t total = binomial(n, p.uniformity());
        // ex = 0 means a single edge already forces a copy: every coloring is bad
        const bool forces = tr.value == 0 ? total > 0
                                          : (total + tr.value - 1) / tr.value > static_cast<std::uint64_t>(k);
        if (forces) {
            out.bound = n;
            return out;
        }
    }
    return out;
}

RamseyBounds ramsey_bounds(const Pattern& p, int k, const BoundsBudgets& budgets) {
    if (k < 1) throw std::invalid_argument("ramsey_bounds: need k >= 1");
    RamseyBounds rb;
    rb.pattern = p.name;
    rb.k = k;

    // lower bounds: r_k(p) >= value means a good coloring exists on value-1 vertices
    int lower = p.vertex_count();
    std::string lower_prov = "trivial (pattern has " + std::to_string(p.vertex_count()) + " vertices)";
    auto improve_lower = [&](const Coloring& c, const std::string& prov) {
        if (c.n + 1 <= lower) return;
        if (find_mono_copy(c, p)) return;  // re-verify before trusting
        lower = c.n + 1;
        lower_prov = prov;
    };

    for (const auto& info : certificate_catalog())
        if (info.pattern == p.name && info.k <= k)
            improve_lower(certificate(info.name), "certificate:" + info.name);

    if (p.name == "kite" && k >= 3)
        improve_lower(sum_mod(k, k), "construction:sum-mod(" + std::to_string(k) + "," + std::to_string(k) + ")");
    if (p.name == "F" && p.params.size() == 2 && p.params[1] == 2) {
        const int n = k * (p.params[0] - 1);
        if (n >= 3) improve_lower(sum_mod(n, k), "construction:sum-mod(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    if (p.name == "matching2")
        improve_lower(kneser_matching_coloring(p.uniformity(), k), "construction:kneser");
    if (p.name == "bow" && k >= 7) {
        auto d8 = find_design(3, 8, 4, 1, budgets.design_nodes);
        if (d8.status == SearchStatus::Found) {
            auto res = resolve(*d8.design, budgets.design_nodes);
            if (res.status == SearchStatus::Found)
                improve_lower(coloring_from_resolution(*res.resolution), "design:3-(8,4,1) parallel classes");
        }
        if (k >= 15) {
            auto d10 = find_design(3, 10, 4, 1, budgets.design_nodes);
            if (d10.status == SearchStatus::Found) {
                auto pp = pair_partition_coloring(*d10.design, budgets.design_nodes);
                if (pp.status == SearchStatus::Found)
                    improve_lower(*pp.coloring, "design:3-(10,4,1) disjoint pairs");
            }
        }
    }

    // upper bound: Turan pigeonhole first
    std::optional<int> upper;
    std::string upper_prov;
    PigeonholeBound ph = ramsey_upper_from_turan(p, k, budgets.turan_cap, budgets.turan_nodes);
    if (ph.bound) {
        upper = ph.bound;
        for (const auto& [n, ex] : ph.table)
            if (n == *ph.bound)
                upper_prov = "turan-pigeonhole at n=" + std::to_string(n) + " with ex=" + std::to_string(ex);
    }

    // close the interval by direct search from below
    while ((!upper || lower < *upper) && lower <= budgets.max_search_host) {
        SearchOutcome so = exists_good_coloring(p, k, lower, budgets.search_nodes, budgets.threads);
        if (so.status == SearchStatus::Found) {
            lower_prov = "search at n=" + std::to_string(lower);
            ++lower;
        } else if (so.status == SearchStatus::NotFound) {
            upper = lower;
            upper_prov = "search at n=" + std::to_string(lower);
            break;
        } else {
            break;  // budget exceeded: leave the interval open
        }
    }

    if (upper && lower > *upper)
        throw std::logic_error("ramsey_bounds: verified lower bound exceeds verified upper bound");
    rb.lower = lower;
    rb.lower_provenance = lower_prov;
    rb.upper = upper;
    rb.upper_provenance = upper_prov;
    return rb;
}

}  // namespace ramseylab
