#include "ramseylab/designs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ramseylab/combinatorics.hpp"

namespace ramseylab {

namespace {

void validate_design(const Design& d) {
    if (d.block_size < 1 || d.block_size > d.v)
        throw std::invalid_argument("Design: block size out of range");
    std::set<std::uint64_t> seen;
    for (const auto& b : d.blocks) {
        if (static_cast<int>(b.size()) != d.block_size)
            throw std::invalid_argument("Design: block of wrong size");
        if (!seen.insert(colex_rank(b, d.v)).second)
            throw std::invalid_argument("Design: duplicate block");
    }
}

std::vector<std::uint64_t> t_subset_ranks(std::span<const Vertex> block, int t) {
    std::vector<std::uint64_t> out;
    std::vector<Vertex> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Vertex> sub(static_cast<std::size_t>(t));
    do {
        for (int i = 0; i < t; ++i) sub[static_cast<std::size_t>(i)] = block[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        out.push_back(colex_rank(sub));
    } while (next_colex_subset(idx, static_cast<int>(block.size())));
    return out;
}

}  // namespace

bool is_t_design(const Design& d, int t, std::uint64_t lambda) {
    if (t < 1 || t > d.block_size)
        throw std::invalid_argument("is_t_design: need 1 <= t <= block_size");
    validate_design(d);
    std::vector<std::uint64_t> count(static_cast<std::size_t>(binomial(d.v, t)), 0);
    for (const auto& b : d.blocks)
        for (std::uint64_t rank : t_subset_ranks(b, t)) ++count[rank];
    return std::all_of(count.begin(), count.end(),
                       [lambda](std::uint64_t c) { return c == lambda; });
}

DesignSearchResult find_design(int t, int v, int block_size, std::uint64_t lambda,
                               std::uint64_t budget) {
    if (t < 1 || block_size < t || v < block_size || lambda < 1)
        throw std::invalid_argument("find_design: bad parameters");
    DesignSearchResult result;

    // necessary divisibility: lambda * C(v-i, t-i) / C(bs-i, t-i) must be
    // integral for every i <= t (the i-th derived design's block count)
    for (int i = 0; i <= t; ++i) {
        std::uint64_t num = lambda * binomial(v - i, t - i);
        std::uint64_t den = binomial(block_size - i, t - i);
        if (num % den != 0) {
            result.status = SearchStatus::NotFound;
            result.note = "counting obstruction";
            return result;
        }
    }

    // candidate blocks in colex order, with their t-subset lists
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::vector<std::uint64_t>> block_subsets;
    {
        auto b = first_colex_subset(block_size);
        do {
            blocks.push_back(b);
            block_subsets.push_back(t_subset_ranks(b, t));
        } while (next_colex_subset(b, v));
    }
    const std::size_t num_t = static_cast<std::size_t>(binomial(v, t));
    std::vector<std::vector<int>> containing(num_t);  // t-subset -> candidate blocks
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (std::uint64_t sr : block_subsets[bi]) containing[sr].push_back(static_cast<int>(bi));

    std::vector<std::uint64_t> cover(num_t, 0);
    std::vector<int> chosen;
    bool exceeded = false;

    // branch on the colex-least deficient t-subset; consecutive blocks for
    // the same t-subset are forced ascending so each design shows up once
    auto dfs = [&](auto&& self, std::size_t scan_from, int min_block) -> bool {
        std::size_t trigger = scan_from;
        while (trigger < num_t && cover[trigger] == lambda) ++trigger;
        if (trigger == num_t) return true;
        int floor_block = (trigger == scan_from) ? min_block : -1;
        for (int bi : containing[trigger]) {
            if (bi <= floor_block) continue;
            if (++result.nodes > budget) {
                exceeded = true;
                return false;
            }
            bool ok = true;
            for (std::uint64_t sr : block_subsets[static_cast<std::size_t>(bi)])
                if (cover[sr] == lambda) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (std::uint64_t sr : block_subsets[static_cast<std::size_t>(bi)]) ++cover[sr];
            chosen.push_back(bi);
            if (self(self, trigger, bi)) return true;
            chosen.pop_back();
            for (std::uint64_t sr : block_subsets[static_cast<std::size_t>(bi)]) --cover[sr];
            if (exceeded) return false;
        }
        return false;
    };

    if (dfs(dfs, 0, -1)) {
        Design d;
        d.v = v;
        d.block_size = block_size;
        std::sort(chosen.begin(), chosen.end());
        for (int bi : chosen) d.blocks.push_back(blocks[static_cast<std::size_t>(bi)]);
        result.design = std::move(d);
        result.status = SearchStatus::Found;
    } else {
        result.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    return result;
}

ResolveResult resolve(const Design& d, std::uint64_t budget) {
    validate_design(d);
    ResolveResult result;
    if (d.block_size == 0 || d.v % d.block_size != 0) {
        result.status = SearchStatus::NotFound;
        return result;
    }
    const int per_class = d.v / d.block_size;
    const int nb = static_cast<int>(d.block_count());
    if (nb % per_class != 0) {
        result.status = SearchStatus::NotFound;
        return result;
    }

    std::vector<std::uint64_t> point_mask(static_cast<std::size_t>(nb), 0);
    for (int i = 0; i < nb; ++i)
        for (Vertex p : d.blocks[static_cast<std::size_t>(i)])
            point_mask[static_cast<std::size_t>(i)] |= std::uint64_t{1} << p;

    std::vector<bool> used(static_cast<std::size_t>(nb), false);
    std::vector<std::vector<int>> classes;
    std::vector<int> current;
    bool exceeded = false;

    // a class always starts at the least unused block; extensions ascend
    auto extend_class = [&](auto&& self, auto&& next_class, std::uint64_t mask, int last) -> bool {
        if (static_cast<int>(current.size()) == per_class) {
            classes.push_back(current);
            if (next_class(next_class)) return true;
            classes.pop_back();
            return false;
        }
        for (int i = last + 1; i < nb; ++i) {
            if (used[static_cast<std::size_t>(i)] || (point_mask[static_cast<std::size_t>(i)] & mask)) continue;
            if (++result.nodes > budget) {
                exceeded = true;
                return false;
            }
            used[static_cast<std::size_t>(i)] = true;
            current.push_back(i);
            if (self(self, next_class, mask | point_mask[static_cast<std::size_t>(i)], i)) return true;
            current.pop_back();
            used[static_cast<std::size_t>(i)] = false;
            if (exceeded) return false;
        }
        return false;
    };
    auto seed_class = [&](auto&& self) -> bool {
        int first = 0;
        while (first < nb && used[static_cast<std::size_t>(first)]) ++first;
        if (first == nb) return true;
        if (++result.nodes > budget) {
            exceeded = true;
            return false;
        }
        used[static_cast<std::size_t>(first)] = true;
        current = {first};
        bool found = extend_class(extend_class, self, point_mask[static_cast<std::size_t>(first)], first);
        if (!found) {
            used[static_cast<std::size_t>(first)] = false;
            current.clear();
        }
        return found;
    };

    if (seed_class(seed_class)) {
        result.resolution = Resolution{d, classes};
        result.status = SearchStatus::Found;
    } else {
        result.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    return result;
}

Coloring coloring_from_resolution(const Resolution& res) {
    const Design& d = res.design;
    validate_design(d);
    if (d.block_size != 4)
        throw std::invalid_argument("coloring_from_resolution: block size must be 4");

    // structural checks: classes partition the blocks, each class the points
    std::vector<int> seen(d.block_count(), 0);
    for (const auto& cls : res.classes) {
        std::uint64_t mask = 0;
        for (int bi : cls) {
            if (bi < 0 || bi >= static_cast<int>(d.block_count()))
                throw std::invalid_argument("coloring_from_resolution: bad block index");
            ++seen[static_cast<std::size_t>(bi)];
            for (Vertex p : d.blocks[static_cast<std::size_t>(bi)]) {
                std::uint64_t bit = std::uint64_t{1} << p;
                if (mask & bit)
                    throw std::invalid_argument("coloring_from_resolution: class blocks overlap");
                mask |= bit;
            }
        }
        if (mask != (d.v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d.v) - 1))
            throw std::invalid_argument("coloring_from_resolution: class misses points");
    }
    for (int c : seen)
        if (c != 1) throw std::invalid_argument("coloring_from_resolution: classes do not partition blocks");

    const int k = static_cast<int>(res.classes.size());
    Coloring out(3, d.v, k);
    for (int ci = 0; ci < k; ++ci)
        for (int bi : res.classes[static_cast<std::size_t>(ci)])
            for (std::uint64_t tr : t_subset_ranks(d.blocks[static_cast<std::size_t>(bi)], 3)) {
                if (out.colors[tr] != Coloring::kUnassigned)
                    throw std::invalid_argument("coloring_from_resolution: triple in two blocks");
                out.colors[tr] = ci;
            }
    if (!out.is_total())
        throw std::invalid_argument("coloring_from_resolution: triple in no block");
    return out;
}

PairPartitionResult pair_partition_coloring(const Design& d, std::uint64_t budget) {
    if (d.block_size != 4 || !is_t_design(d, 3, 1))
        throw std::invalid_argument("pair_partition_coloring: input is not a 3-(v,4,1) design");
    PairPartitionResult result;
    const int nb = static_cast<int>(d.block_count());

    std::vector<std::uint64_t> point_mask(static_cast<std::size_t>(nb), 0);
    for (int i = 0; i < nb; ++i)
        for (Vertex p : d.blocks[static_cast<std::size_t>(i)])
            point_mask[static_cast<std::size_t>(i)] |= std::uint64_t{1} << p;

    const int parity = nb % 2;
    std::vector<int> partner(static_cast<std::size_t>(nb), -1);  // -1 open, -2 singleton
    std::vector<int> best_partner;
    int best_singletons = nb + 1;
    bool exceeded = false;

    auto dfs = [&](auto&& self, int singletons) -> bool {
        if (singletons >= best_singletons) return false;
        int i = 0;
        while (i < nb && partner[static_cast<std::size_t>(i)] != -1) ++i;
        if (i == nb) {
            best_singletons = singletons;
            best_partner = partner;
            return singletons == parity;  // cannot do better; stop
        }
        for (int j = i + 1; j < nb; ++j) {
            if (partner[static_cast<std::size_t>(j)] != -1 ||
                (point_mask[static_cast<std::size_t>(i)] & point_mask[static_cast<std::size_t>(j)]))
                continue;
            if (++result.nodes > budget) {
                exceeded = true;
                return false;
            }
            partner[static_cast<std::size_t>(i)] = j;
            partner[static_cast<std::size_t>(j)] = i;
            if (self(self, singletons)) return true;
            partner[static_cast<std::size_t>(i)] = -1;
            partner[static_cast<std::size_t>(j)] = -1;
            if (exceeded) return false;
        }
        if (++result.nodes > budget) {
            exceeded = true;
            return false;
        }
        partner[static_cast<std::size_t>(i)] = -2;
        if (self(self, singletons + 1)) return true;
        partner[static_cast<std::size_t>(i)] = -1;
        return false;
    };
    dfs(dfs, 0);

    if (exceeded && best_singletons > parity) {
        result.status = SearchStatus::BudgetExceeded;
        return result;
    }
    if (best_singletons != parity) {
        result.status = SearchStatus::NotFound;
        return result;
    }

    for (int i = 0; i < nb; ++i) {
        int p = best_partner[static_cast<std::size_t>(i)];
        if (p == -2)
            result.groups.push_back({i});
        else if (p > i)
            result.groups.push_back({i, p});
    }
    const int k = static_cast<int>(result.groups.size());
    Coloring out(3, d.v, k);
    for (int g = 0; g < k; ++g)
        for (int bi : result.groups[static_cast<std::size_t>(g)])
            for (std::uint64_t tr : t_subset_ranks(d.blocks[static_cast<std::size_t>(bi)], 3))
                out.colors[tr] = g;
    result.coloring = std::move(out);
    result.status = SearchStatus::Found;
    return result;
}

Design cyclic_shift_design(int v, std::span<const Vertex> base_block) {
    validate_rsubset(base_block, v);
    std::set<std::vector<Vertex>> blocks;
    for (int shift = 0; shift < v; ++shift) {
        std::vector<Vertex> b(base_block.begin(), base_block.end());
        for (auto& x : b) x = (x + shift) % v;
        std::sort(b.begin(), b.end());
        blocks.insert(std::move(b));
    }
    Design d;
    d.v = v;
    d.block_size = static_cast<int>(base_block.size());
    d.blocks.assign(blocks.begin(), blocks.end());
    return d;
}

}  // namespace ramseylab
