#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/hypergraph.hpp"
#include "ramseylab/pattern.hpp"

namespace ramseylab {

/// An injective vertex map witnessing a copy of a pattern inside a host:
/// pattern vertex i sits at host vertex map[i]. For monochromatic copies,
/// color is the common color of all image edges; uncolored containment
/// witnesses carry kNoColor.
struct Embedding {
    static constexpr std::int32_t kNoColor = -1;

    std::vector<Vertex> map;
    std::int32_t color = kNoColor;
};

/// Searches a total coloring for a monochromatic copy of p. Returns the
/// first witness in backtracking order, or nullopt if none exists.
std::optional<Embedding> find_mono_copy(const Coloring& c, const Pattern& p);

/// Number of monochromatic copies of p, counted per subhypergraph (i.e.
/// embeddings divided by the pattern's automorphism group order).
std::uint64_t count_mono_copies(const Coloring& c, const Pattern& p);

/// Uncolored containment: a copy of p among the host's edges, or nullopt.
std::optional<Embedding> contains_copy(const UniformHypergraph& host, const Pattern& p);

}  // namespace ramseylab
