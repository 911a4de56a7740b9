#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramseylab/hypergraph.hpp"

namespace ramseylab {

/// A small labeled r-uniform hypergraph used as a forbidden configuration.
/// automorphisms is the order of its vertex-automorphism group, used to
/// report copy counts per subhypergraph rather than per embedding.
struct Pattern {
    std::string name;
    std::vector<int> params;  // catalog parameters, e.g. {a, b} for F(a,b)
    UniformHypergraph graph;
    std::uint64_t automorphisms = 1;

    int vertex_count() const { return graph.n; }
    int uniformity() const { return graph.r; }
};

/// Catalog lookup by bare name plus numeric parameters.
/// Names: bow, kite, matching2 [r], F5, K43e, clique (s, r), C33, windmill,
/// tightpath, pasch, F (a, b), Hr (r, s, t).
Pattern pattern_catalog(std::string_view name, std::span<const int> params = {});

/// Parses "kite", "clique(4,3)", "F(3,2)", "matching2(4)", ... into a Pattern.
Pattern parse_pattern(std::string_view text);

/// Bare names accepted by pattern_catalog, for help output.
std::vector<std::string> pattern_names();

/// Order of the automorphism group by exhaustive permutation check.
/// Intended for parameterized patterns and for test cross-checks; patterns
/// have at most 8 vertices so this is cheap.
std::uint64_t brute_force_automorphisms(const UniformHypergraph& g);

}  // namespace ramseylab
