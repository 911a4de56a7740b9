#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/detect.hpp"
#include "ramseylab/pattern.hpp"
#include "ramseylab/status.hpp"

namespace ramseylab {

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Coloring> certificate;  // present iff Found; verified mono-free
    std::uint64_t nodes_explored = 0;
};

/// All copies of p inside the complete host on n vertices, as sorted lists
/// of edge ranks (one list per subhypergraph copy).
std::vector<std::vector<std::uint32_t>> pattern_copies_in_host(const Pattern& p, int n);

/// Decides whether some k-coloring of the complete host on n vertices has no
/// monochromatic copy of p. Edges are colored in colex order; a color is
/// rejected as soon as it completes a monochromatic copy among the edges
/// colored so far, and color symmetry is broken by allowing at most one not
/// yet used color per edge. nodes_explored counts assignment attempts; the
/// budget bounds them. With threads > 1 the root of the tree is split into
/// subtrees processed in parallel, each with an equal budget share, and the
/// reduction over subtrees is deterministic.
SearchOutcome exists_good_coloring(const Pattern& p, int k, int n, std::uint64_t budget,
                                   int threads = 1);

struct TuranResult {
    std::uint64_t value = 0;  // exact maximum, or best found when !exact
    bool exact = false;
    UniformHypergraph witness;
    std::uint64_t nodes = 0;
};

/// Maximum edge count of a p-free subhypergraph of the complete host on n
/// vertices, by branch and bound over edges in descending copy-degree order.
/// Prunes on copy completion and on current + remaining <= best.
TuranResult turan_number(const Pattern& p, int n, std::uint64_t budget);

struct PigeonholeBound {
    std::optional<int> bound;  // smallest certified n with ceil(C(n,r)/ex) > k
    // (n, exact ex(n,p)) pairs certified along the way
    std::vector<std::pair<int, std::uint64_t>> table;
};

/// Upper bound r_k(p) <= n from the pigeonhole over exact Turan numbers:
/// the smallest n <= n_cap with ceil(C(n,r)/ex(n,p)) > k. Hosts whose Turan
/// number is not certified exact within the per-host budget are skipped.
PigeonholeBound ramsey_upper_from_turan(const Pattern& p, int k, int n_cap,
                                        std::uint64_t budget_per_host);

struct BoundsBudgets {
    std::uint64_t search_nodes = 200'000'000;
    std::uint64_t turan_nodes = 20'000'000;
    std::uint64_t design_nodes = 10'000'000;
    int turan_cap = 10;
    int max_search_host = 12;
    int threads = 1;
};

struct RamseyBounds {
    std::string pattern;
    int k = 0;
    std::optional<int> lower;  // r_k >= lower
    std::string lower_provenance;
    std::optional<int> upper;  // r_k <= upper
    std::string upper_provenance;
};

/// Tightest verified interval for r_k(p), combining catalog certificates,
/// constructions, design-based colorings, the Turan pigeonhole and direct
/// search. Every bound used is re-verified before being reported.
RamseyBounds ramsey_bounds(const Pattern& p, int k, const BoundsBudgets& budgets = {});

}  // namespace ramseylab
