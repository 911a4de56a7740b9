#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/hypergraph.hpp"

namespace ramseylab {

/// Lifts an r-uniform coloring phi on n vertices to an (r+1)-uniform coloring
/// on 2^n vertices with 2*phi.k + 2*phi.r - 4 color slots. Vertices of the
/// output are read as n-bit strings, coordinate 1 being the most significant
/// bit; the color of an (r+1)-set is decided by the first-differing-bit
/// indices of consecutive vertices (monotone index sequences defer to phi,
/// peaks and valleys get their own colors). If phi has no monochromatic
/// clique on r+1 vertices, the output has none on r+2.
Coloring stepping_up(const Coloring& phi);

/// Builds a 4k-coloring of triples from a k-coloring of pairs that has no
/// monochromatic triangle; the result has no monochromatic K43e. Triples
/// spanning rainbow triangles are colored (0, color of the top pair); triples
/// spanning a monochromatic path are colored by the path's center position
/// and the color of the remaining pair. Encoding: (t, c) -> t*k + c.
/// Throws if phi contains a monochromatic triangle.
Coloring k43e_from_graph(const Coloring& phi);

/// Colors triple {i,j,k} of [0,n) with (i+j+k) mod m. With m = n this has no
/// monochromatic kite; with n = k*(a-1), m = k it has no monochromatic F(a,2).
Coloring sum_mod(int n, int m);

/// Proper coloring of the disjointness structure: on k+2r-2 vertices, the
/// r-set S gets color min(min(S), k-1). No two disjoint r-sets share a color.
Coloring kneser_matching_coloring(int r, int k);

struct CoverSpec {
    UniformHypergraph base;  // the H-free template; host is K on the same n
    int k = 1;
    std::uint64_t seed = 0;
    int max_retries = 4;
};

struct RandomCoverResult {
    std::optional<Coloring> coloring;
    std::string rng_algorithm = "mt19937_64/fisher-yates-v1";
    int attempts = 0;
};

/// Covers the complete host with k independently permuted copies of the base;
/// each edge takes the smallest copy index covering it. Fails (nullopt) if
/// some edge stays uncovered after max_retries redraws. Every color class is
/// a subhypergraph of a permuted base copy.
RandomCoverResult random_cover(const CoverSpec& spec);

/// Complete r-partite r-uniform hypergraph on n vertices with balanced
/// contiguous parts (sizes differ by at most one).
UniformHypergraph balanced_rpartite(int n, int r);

/// Triple system on 3(q^2+q+1) vertices: the incidence pairs of the
/// projective plane of order q, each joined to every one of q^2+q+1 apex
/// vertices. Pasch-free. Supported q: 2, 3.
UniformHypergraph pasch_free_host(int q);

struct CertificateInfo {
    std::string name;
    std::string pattern;  // the pattern the coloring avoids monochromatically
    int k = 0;
    int n = 0;
    std::string description;
};

/// Named explicit colorings, reconstructed programmatically.
Coloring certificate(std::string_view name);
std::vector<CertificateInfo> certificate_catalog();

/// 2-coloring of the pairs of [0,5) into two Hamiltonian 5-cycles
/// (cycle 0-1-2-3-4 gets color 0, its complement color 1). Triangle-free.
Coloring k5_two_cycle_coloring();

}  // namespace ramseylab
