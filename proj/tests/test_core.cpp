#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ramseylab/coloring.hpp"
#include "ramseylab/constructions.hpp"
#include "ramseylab/detect.hpp"
#include "ramseylab/pattern.hpp"
#include "ramseylab/tower.hpp"

using namespace ramseylab;

namespace {

Coloring constant_coloring(int r, int n, int k, std::int32_t color) {
    Coloring c(r, n, k);
    std::fill(c.colors.begin(), c.colors.end(), color);
    return c;
}

std::map<oracle::Edge, int> as_oracle_coloring(const Coloring& c) {
    std::map<oracle::Edge, int> out;
    auto list = oracle::colex_subsets(c.n, c.r);
    for (const auto& e : list) {
        std::vector<Vertex> verts(e.begin(), e.end());
        out[e] = c.color_of(verts);
    }
    return out;
}

std::vector<oracle::Edge> oracle_edges(const Pattern& p) {
    std::vector<oracle::Edge> out;
    for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
        auto verts = p.graph.edge_vertices(e);
        out.emplace_back(verts.begin(), verts.end());
    }
    return out;
}

// independent permutation check, deliberately not the library's
std::uint64_t count_automorphisms(const Pattern& p) {
    std::set<oracle::EdgeSet> target;
    oracle::EdgeSet edges;
    for (const auto& e : oracle_edges(p)) edges.insert(e);
    std::vector<int> perm(p.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        oracle::EdgeSet image;
        for (const auto& e : edges) {
            oracle::Edge im;
            for (int v : e) im.push_back(perm[v]);
            std::sort(im.begin(), im.end());
            image.insert(im);
        }
        if (image == edges) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Coloring permuted(const Coloring& c, const std::vector<Vertex>& perm) {
    Coloring out(c.r, c.n, c.k);
    auto subset = first_colex_subset(c.r);
    std::uint64_t rank = 0;
    do {
        std::vector<Vertex> image;
        for (Vertex v : subset) image.push_back(perm[static_cast<std::size_t>(v)]);
        std::sort(image.begin(), image.end());
        out.set(image, c.colors[rank]);
        ++rank;
    } while (next_colex_subset(subset, c.n));
    return out;
}

}  // namespace

TEST_CASE("colex rank examples") {
    CHECK(colex_rank(std::vector<Vertex>{0, 1, 2}) == 0);
    CHECK(colex_rank(std::vector<Vertex>{0, 1, 3}) == 1);
    CHECK(colex_rank(std::vector<Vertex>{4, 5, 6}) == 34);
    CHECK(colex_unrank(0, 3) == std::vector<Vertex>{0, 1, 2});
    CHECK(colex_unrank(34, 3) == std::vector<Vertex>{4, 5, 6});
    CHECK(colex_unrank(1, 2) == std::vector<Vertex>{0, 2});
    CHECK_THROWS_AS(colex_rank(std::vector<Vertex>{2, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(colex_rank(std::vector<Vertex>{1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(colex_rank(std::vector<Vertex>{0, 1, 9}, 9), std::invalid_argument);
}

TEST_CASE("rank/unrank bijection matches an independent colex enumeration") {
    for (int r = 2; r <= 4; ++r)
        for (int n = r; n <= 10; ++n) {
            auto list = oracle::colex_subsets(n, r);
            REQUIRE(list.size() == binomial(n, r));
            for (std::size_t rank = 0; rank < list.size(); ++rank) {
                std::vector<Vertex> expected(list[rank].begin(), list[rank].end());
                CHECK(colex_unrank(rank, r) == expected);
                CHECK(colex_rank(expected, n) == rank);
            }
            // incremental enumeration agrees too
            auto s = first_colex_subset(r);
            std::size_t i = 0;
            do {
                std::vector<int> as_int(s.begin(), s.end());
                CHECK(as_int == list[i]);
                ++i;
            } while (next_colex_subset(s, n));
            CHECK(i == list.size());
        }
}

TEST_CASE("binomial overflow is loud") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("pattern catalog shapes") {
    Pattern kite = pattern_catalog("kite");
    CHECK(kite.vertex_count() == 4);
    CHECK(kite.graph.edges == std::vector<std::uint64_t>{colex_rank(std::vector<Vertex>{0, 1, 2}),
                                                         colex_rank(std::vector<Vertex>{0, 1, 3})});
    Pattern pasch = pattern_catalog("pasch");
    CHECK(pasch.vertex_count() == 6);
    CHECK(pasch.graph.edge_count() == 4);
    CHECK(pasch.graph.has_edge(colex_rank(std::vector<Vertex>{0, 1, 2})));
    CHECK(pasch.graph.has_edge(colex_rank(std::vector<Vertex>{1, 3, 4})));
    CHECK(pasch.graph.has_edge(colex_rank(std::vector<Vertex>{2, 4, 5})));
    CHECK(pasch.graph.has_edge(colex_rank(std::vector<Vertex>{0, 3, 5})));

    Pattern k43 = parse_pattern("clique(4,3)");
    CHECK(k43.vertex_count() == 4);
    CHECK(k43.graph.edge_count() == 4);

    CHECK(pattern_catalog("F5").graph.edge_count() == 3);
    CHECK(pattern_catalog("windmill").graph.edge_count() == 4);
    CHECK(pattern_catalog("tightpath").graph.edge_count() == 3);
    CHECK(pattern_catalog("C33").graph.edge_count() == 3);
    CHECK(parse_pattern("matching2(2)").vertex_count() == 4);
    CHECK(parse_pattern("F(3,2)").graph.edge_count() == 3);
    CHECK(parse_pattern("Hr(3,2,2)").graph.edge_count() == 4);

    CHECK_THROWS_AS(pattern_catalog("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("clique(3,3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("clique(4"), std::invalid_argument);
}

TEST_CASE("hard-coded automorphism group orders survive brute force") {
    for (const char* name : {"bow", "kite", "F5", "K43e", "C33", "windmill", "tightpath", "pasch"}) {
        Pattern p = pattern_catalog(name);
        CAPTURE(name);
        CHECK(p.automorphisms == count_automorphisms(p));
    }
    for (auto spec : {"clique(4,3)", "clique(5,3)", "matching2(2)", "matching2(3)", "F(1,2)",
                      "F(2,2)", "F(3,2)", "F(2,3)", "Hr(3,2,2)", "Hr(3,1,2)", "Hr(4,2,2)"}) {
        Pattern p = parse_pattern(spec);
        CAPTURE(spec);
        CHECK(p.automorphisms == count_automorphisms(p));
    }
}

TEST_CASE("find_mono_copy basics") {
    Pattern kite = pattern_catalog("kite");
    Coloring all_one = constant_coloring(3, 4, 1, 0);
    auto copy = find_mono_copy(all_one, kite);
    REQUIRE(copy.has_value());
    CHECK(copy->color == 0);

    CHECK_FALSE(find_mono_copy(sum_mod(5, 5), kite).has_value());
    CHECK_FALSE(find_mono_copy(certificate("f5_k2_n5"), pattern_catalog("F5")).has_value());

    Coloring partial(3, 4, 2);
    partial.colors[0] = 0;
    CHECK_THROWS_AS(find_mono_copy(partial, kite), std::invalid_argument);
    CHECK_THROWS_AS(find_mono_copy(constant_coloring(2, 4, 1, 0), kite), std::invalid_argument);
}

TEST_CASE("count_mono_copies counts subhypergraph copies") {
    Coloring all_one = constant_coloring(3, 4, 1, 0);
    CHECK(count_mono_copies(all_one, parse_pattern("clique(4,3)")) == 1);

    // oracle first: distinct monochromatic edge-image sets in the all-one K_4^3
    Pattern kite = pattern_catalog("kite");
    auto oracle_count =
        oracle::mono_copies(as_oracle_coloring(all_one), oracle_edges(kite), 4, 4).size();
    CHECK(oracle_count == 6);  // frozen from the oracle
    CHECK(count_mono_copies(all_one, kite) == oracle_count);

    CHECK(count_mono_copies(sum_mod(5, 5), kite) == 0);
}

TEST_CASE("detector agrees with the naive oracle on every 2-coloring of K_5^3") {
    std::vector<Pattern> patterns = {pattern_catalog("bow"), pattern_catalog("kite"),
                                     pattern_catalog("matching2")};
    auto host = oracle::colex_subsets(5, 3);
    REQUIRE(host.size() == 10);
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        Coloring c(3, 5, 2);
        std::map<oracle::Edge, int> ref;
        for (int i = 0; i < 10; ++i) {
            c.colors[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            ref[host[static_cast<std::size_t>(i)]] = (mask >> i) & 1;
        }
        for (const Pattern& p : patterns) {
            auto expected = oracle::mono_copies(ref, oracle_edges(p), p.vertex_count(), 5);
            CAPTURE(mask);
            CAPTURE(p.name);
            CHECK(find_mono_copy(c, p).has_value() == !expected.empty());
            CHECK(count_mono_copies(c, p) == expected.size());
        }
    }
}

TEST_CASE("contains_copy basics") {
    Pattern bow = pattern_catalog("bow");
    UniformHypergraph k43 = UniformHypergraph::complete(3, 4);
    CHECK_FALSE(contains_copy(k43, bow).has_value());

    UniformHypergraph two = UniformHypergraph::from_edges(3, 5, {{0, 1, 2}, {0, 3, 4}});
    auto emb = contains_copy(two, bow);
    REQUIRE(emb.has_value());
    CHECK(emb->color == Embedding::kNoColor);

    UniformHypergraph pairs = UniformHypergraph::complete(2, 5);
    CHECK_THROWS_AS(contains_copy(pairs, bow), std::invalid_argument);
}

TEST_CASE("trace examples") {
    Coloring all_one = constant_coloring(3, 4, 1, 0);
    Coloring t = trace_at(all_one, 3);
    CHECK(t.r == 2);
    CHECK(t.n == 3);
    CHECK(t.colors == std::vector<std::int32_t>{0, 0, 0});

    CHECK(trace_at(certificate("k43e_k2_n6"), 5) == k5_two_cycle_coloring());

    Coloring s = trace_at(sum_mod(5, 5), 4);
    for (Vertex j = 1; j < 4; ++j)
        for (Vertex i = 0; i < j; ++i) {
            Vertex pair[2] = {i, j};
            CHECK(s.color_of(pair) == (i + j + 4) % 5);
        }

    CHECK_THROWS_AS(trace_at(all_one, 7), std::invalid_argument);
}

TEST_CASE("trace of a K43e-free coloring of K_6^3 is triangle-free at every vertex") {
    Pattern k43e = pattern_catalog("K43e");
    Pattern triangle = parse_pattern("clique(3,2)");
    std::mt19937 gen(20240811);
    std::vector<Coloring> subjects = {certificate("k43e_k2_n6")};
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(perm.begin(), perm.end(), gen);
        subjects.push_back(permuted(certificate("k43e_k2_n6"), perm));
    }
    // random colorings that happen to satisfy the hypothesis count too
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < 200; ++i) {
        Coloring c(3, 6, 2);
        for (auto& col : c.colors) col = bit(gen);
        if (!find_mono_copy(c, k43e)) subjects.push_back(std::move(c));
    }
    for (const Coloring& c : subjects) {
        REQUIRE_FALSE(find_mono_copy(c, k43e).has_value());
        for (Vertex v = 0; v < 6; ++v)
            CHECK_FALSE(find_mono_copy(trace_at(c, v), triangle).has_value());
    }
}

TEST_CASE("density is exact") {
    CHECK(density(UniformHypergraph::complete(3, 4)) == Rational(1, 1));
    CHECK(density(balanced_rpartite(9, 3)) == Rational(27, 84));
    CHECK(density(UniformHypergraph(3, 6)) == Rational(0, 1));
}

TEST_CASE("tower values and the too-large marker") {
    CHECK(tower(1, 7).value == 7);
    CHECK(tower(2, 3).value == 8);
    CHECK(tower(3, 2).value == 16);
    CHECK(tower(2, 62).exact);
    CHECK_FALSE(tower(2, 63).exact);
    CHECK_FALSE(tower(3, 6).exact);
    CHECK(tower(3, 6).to_string() == ">=2^63 (too large)");
    CHECK_THROWS_AS(tower(0, 3), std::invalid_argument);
}

TEST_CASE("coloring invariants") {
    Coloring c(3, 5, 2);
    CHECK_FALSE(c.is_total());
    CHECK(c.edge_count() == 10);
    Vertex e[3] = {0, 2, 4};
    c.set(e, 1);
    CHECK(c.color_of(e) == 1);
    CHECK_THROWS_AS(c.set(e, 2), std::invalid_argument);
    CHECK(c.class_sizes() == std::vector<std::uint64_t>{0, 1});
}
