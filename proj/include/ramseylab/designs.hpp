#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/status.hpp"

namespace ramseylab {

/// A set of block_size-subsets (blocks) of [0, v), without duplicates.
struct Design {
    int v = 0;
    int block_size = 0;
    std::vector<std::vector<Vertex>> blocks;

    std::size_t block_count() const { return blocks.size(); }
};

/// True iff every t-subset of [0, v) lies in exactly lambda blocks.
bool is_t_design(const Design& d, int t, std::uint64_t lambda);

struct DesignSearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Design> design;
    std::uint64_t nodes = 0;
    std::string note;  // e.g. "counting obstruction" when parameters are inadmissible
};

/// Backtracking search for a t-(v, block_size, lambda) design. Arithmetic
/// divisibility conditions are checked first; blocks covering the least
/// deficient t-subset are tried in colex order, so each design is met once
/// and the first block is the colex-least admissible one.
DesignSearchResult find_design(int t, int v, int block_size, std::uint64_t lambda,
                               std::uint64_t budget);

/// A partition of a design's blocks into parallel classes; classes hold
/// block indices, each class partitions the point set.
struct Resolution {
    Design design;
    std::vector<std::vector<int>> classes;
};

struct ResolveResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Resolution> resolution;
    std::uint64_t nodes = 0;
};

/// Partitions the blocks into parallel classes if possible. Requires
/// block_size | v (immediate NotFound otherwise).
ResolveResult resolve(const Design& d, std::uint64_t budget);

/// Colors each triple of [0, v) by the parallel class of the block that
/// contains it. Requires block_size = 4 and every triple covered exactly
/// once (i.e. a resolved 3-(v,4,1) design); the result is bow-free.
Coloring coloring_from_resolution(const Resolution& res);

struct PairPartitionResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Coloring> coloring;
    std::vector<std::vector<int>> groups;  // block indices, groups of size <= 2
    std::uint64_t nodes = 0;
};

/// Groups the blocks of a 3-(v,4,1) design into singletons and disjoint
/// pairs with as few groups as possible (a maximum matching in the block
/// disjointness graph), then colors each triple by its block's group.
/// Succeeds only when the matching is perfect up to parity.
PairPartitionResult pair_partition_coloring(const Design& d, std::uint64_t budget);

/// Blocks {(x + i) mod v : x in base} for i = 0..v-1, deduplicated.
Design cyclic_shift_design(int v, std::span<const Vertex> base_block);

}  // namespace ramseylab
