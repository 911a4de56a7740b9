// Command-line surface for the hypergraph Ramsey laboratory: verification of
// coloring files, the construction catalog, and the exact search machinery.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include "ramseylab/constructions.hpp"
#include "ramseylab/designs.hpp"
#include "ramseylab/detect.hpp"
#include "ramseylab/io.hpp"
#include "ramseylab/search.hpp"

namespace rl = ramseylab;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitWitness = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

void print_class_sizes(const rl::Coloring& c) {
    std::printf("color classes:");
    for (std::uint64_t s : c.class_sizes()) std::printf(" %llu", static_cast<unsigned long long>(s));
    std::printf("\n");
}

void print_embedding(const rl::Embedding& emb) {
    std::printf("witness map:");
    for (rl::Vertex v : emb.map) std::printf(" %d", v);
    if (emb.color != rl::Embedding::kNoColor) std::printf("  (color %d)", emb.color);
    std::printf("\n");
}

std::string sanitize(std::string s) {
    for (char& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    return s;
}

// verification that a total coloring has no monochromatic copy; hosts beyond
// 64 vertices are skipped (construction guarantees still hold by proof)
bool self_verify(const rl::Coloring& c, const rl::Pattern& p, const char* guarantee) {
    if (c.n > 64) {
        std::printf("guarantee: %s (host too large for the self-check; holds by construction)\n",
                    guarantee);
        return true;
    }
    auto copy = rl::find_mono_copy(c, p);
    if (copy) {
        std::printf("SELF-CHECK FAILED: monochromatic %s found\n", p.name.c_str());
        print_embedding(*copy);
        return false;
    }
    std::printf("guarantee: %s (self-checked: no monochromatic %s)\n", guarantee, p.name.c_str());
    return true;
}

rl::UniformHypergraph assigned_edges(const rl::Coloring& c) {
    rl::UniformHypergraph h(c.r, c.n);
    for (std::size_t i = 0; i < c.colors.size(); ++i)
        if (c.colors[i] != rl::Coloring::kUnassigned) h.edges.push_back(i);
    return h;
}

int cmd_verify(const std::string& pattern_name, const std::string& file,
               const std::string& cert_name) {
    rl::Pattern p = rl::parse_pattern(pattern_name);
    rl::Coloring c = file.empty() ? rl::load_catalog_coloring(cert_name) : rl::load_coloring(file);
    if (!c.is_total()) {
        // partial files carry plain hypergraphs (e.g. Turan witnesses, hosts):
        // verify uncolored containment instead
        rl::UniformHypergraph host = assigned_edges(c);
        std::printf("partial coloring: %zu assigned edges; checking containment\n",
                    host.edge_count());
        auto copy = rl::contains_copy(host, p);
        if (copy) {
            std::printf("COPY FOUND\n");
            print_embedding(*copy);
            return kExitWitness;
        }
        std::printf("NO COPY\n");
        print_class_sizes(c);
        return kExitClean;
    }
    auto copy = rl::find_mono_copy(c, p);
    if (copy) {
        std::printf("MONO COPY FOUND\n");
        print_embedding(*copy);
        print_class_sizes(c);
        return kExitWitness;
    }
    std::printf("NO MONO COPY\n");
    print_class_sizes(c);
    return kExitClean;
}

struct ConstructArgs {
    std::string name;
    std::string out;
    std::string input;       // stepping-up, k43e: phi coloring file
    int n = 0, m = 0;        // sum-mod
    int r = 3, k = 1;        // kneser, random-cover
    std::string base;        // random-cover template file
    std::uint64_t seed = 0;
    bool seed_set = false;
    int retries = 4;
    std::string check_pattern;  // random-cover: verify classes against this
    int q = 2;               // pasch-host
    std::string cert_name;   // certificate
    std::string design;      // design-coloring: DES1 file
    std::string mode = "resolve";
    std::uint64_t budget = 100'000'000;
};

int cmd_construct(const ConstructArgs& args) {
    rl::Coloring result;
    bool ok = true;

    if (args.name == "stepping-up") {
        rl::Coloring phi = rl::load_coloring(args.input);
        rl::Pattern in_clique = rl::pattern_catalog("clique", std::array{phi.r + 1, phi.r});
        bool hypothesis = phi.n <= 64 && !rl::find_mono_copy(phi, in_clique);
        result = rl::stepping_up(phi);
        if (!hypothesis) {
            std::printf("note: input has a monochromatic clique on %d vertices; "
                        "the lifted guarantee is void\n", phi.r + 1);
        } else if (result.n <= 64) {
            rl::Pattern out_clique = rl::pattern_catalog("clique", std::array{phi.r + 2, phi.r + 1});
            ok = self_verify(result, out_clique, "no monochromatic clique on r+2 vertices");
        } else {
            std::printf("guarantee: no monochromatic clique on r+2 vertices "
                        "(host too large for the self-check; holds by construction)\n");
        }
    } else if (args.name == "k43e") {
        rl::Coloring phi = rl::load_coloring(args.input);
        result = rl::k43e_from_graph(phi);
        ok = self_verify(result, rl::pattern_catalog("K43e"), "no monochromatic K43e");
    } else if (args.name == "sum-mod") {
        result = rl::sum_mod(args.n, args.m);
        if (args.m == args.n) {
            ok = self_verify(result, rl::pattern_catalog("kite"), "no monochromatic kite");
        } else if (args.n % args.m == 0 && args.n / args.m + 3 <= 8) {
            int a = args.n / args.m + 1;
            rl::Pattern f = rl::pattern_catalog("F", std::array{a, 2});
            ok = self_verify(result, f, "no monochromatic F(a,2) at n=k(a-1)");
        } else {
            std::printf("note: no built-in guarantee for n=%d, m=%d\n", args.n, args.m);
        }
    } else if (args.name == "kneser") {
        result = rl::kneser_matching_coloring(args.r, args.k);
        rl::Pattern m2 = rl::pattern_catalog("matching2", std::array{args.r});
        ok = self_verify(result, m2, "no monochromatic 2-matching");
    } else if (args.name == "random-cover") {
        if (!args.seed_set) {
            std::printf("error: random-cover requires an explicit --seed\n");
            return kExitWitness;
        }
        rl::Coloring base_file = rl::load_coloring(args.base);
        rl::CoverSpec spec{assigned_edges(base_file), args.k, args.seed, args.retries};
        rl::RandomCoverResult cover = rl::random_cover(spec);
        std::printf("rng: %s, attempts: %d\n", cover.rng_algorithm.c_str(), cover.attempts);
        if (!cover.coloring) {
            std::printf("error: some edge stayed uncovered after %d attempts\n", cover.attempts);
            return kExitWitness;
        }
        result = *cover.coloring;
        if (!args.check_pattern.empty()) {
            rl::Pattern p = rl::parse_pattern(args.check_pattern);
            for (int c = 0; c < result.k && ok; ++c) {
                rl::UniformHypergraph cls(result.r, result.n);
                cls.edges = result.class_edges(c);
                if (rl::contains_copy(cls, p)) {
                    std::printf("SELF-CHECK FAILED: class %d contains %s\n", c, p.name.c_str());
                    ok = false;
                }
            }
            if (ok)
                std::printf("guarantee: every class is a permuted sub-copy of the template "
                            "(self-checked: all %d classes %s-free)\n", result.k, p.name.c_str());
        }
    } else if (args.name == "pasch-host") {
        rl::UniformHypergraph host = rl::pasch_free_host(args.q);
        result = rl::Coloring(3, host.n, 1);
        for (std::uint64_t e : host.edges) result.colors[e] = 0;
        auto copy = rl::contains_copy(host, rl::pattern_catalog("pasch"));
        if (copy) {
            std::printf("SELF-CHECK FAILED: host contains a Pasch configuration\n");
            print_embedding(*copy);
            ok = false;
        } else {
            std::printf("guarantee: Pasch-free host with %d vertices and %zu triples "
                        "(self-checked)\n", host.n, host.edge_count());
        }
    } else if (args.name == "certificate") {
        if (args.cert_name.empty()) {
            std::printf("available certificates:\n");
            for (const auto& info : rl::certificate_catalog())
                std::printf("  %-12s  %-5s k=%d n=%d  %s\n", info.name.c_str(),
                            info.pattern.c_str(), info.k, info.n, info.description.c_str());
            return kExitWitness;
        }
        result = rl::certificate(args.cert_name);
        for (const auto& info : rl::certificate_catalog())
            if (info.name == args.cert_name) {
                rl::Pattern p = rl::parse_pattern(info.pattern);
                ok = self_verify(result, p, info.description.c_str());
            }
    } else if (args.name == "design-coloring") {
        rl::Design d = rl::load_design(args.design);
        if (args.mode == "resolve") {
            rl::ResolveResult res = rl::resolve(d, args.budget);
            if (res.status == rl::SearchStatus::BudgetExceeded) return kExitBudget;
            if (res.status != rl::SearchStatus::Found) {
                std::printf("error: design is not resolvable\n");
                return kExitWitness;
            }
            result = rl::coloring_from_resolution(*res.resolution);
        } else if (args.mode == "pairs") {
            rl::PairPartitionResult pp = rl::pair_partition_coloring(d, args.budget);
            if (pp.status == rl::SearchStatus::BudgetExceeded) return kExitBudget;
            if (pp.status != rl::SearchStatus::Found) {
                std::printf("error: blocks admit no disjoint-pair partition\n");
                return kExitWitness;
            }
            result = *pp.coloring;
        } else {
            std::printf("error: mode must be resolve or pairs\n");
            return kExitWitness;
        }
        ok = self_verify(result, rl::pattern_catalog("bow"), "no monochromatic bow");
    } else {
        std::printf("error: unknown construction '%s'\n", args.name.c_str());
        return kExitWitness;
    }

    if (!ok) return kExitWitness;
    rl::save_coloring(args.out, result);
    std::printf("wrote %s (r=%d n=%d k=%d)\n", args.out.c_str(), result.r, result.n, result.k);
    print_class_sizes(result);
    return kExitClean;
}

int cmd_search(const std::string& pattern_name, int k, int n, std::uint64_t budget, int threads,
               std::string out) {
    rl::Pattern p = rl::parse_pattern(pattern_name);
    rl::SearchOutcome outcome = rl::exists_good_coloring(p, k, n, budget, threads);
    std::printf("nodes explored: %llu\n", static_cast<unsigned long long>(outcome.nodes_explored));
    switch (outcome.status) {
        case rl::SearchStatus::Found: {
            std::printf("FOUND => r_%d(%s) > %d\n", k, p.name.c_str(), n);
            if (out.empty())
                out = "search_" + sanitize(pattern_name) + "_k" + std::to_string(k) + "_n" +
                      std::to_string(n) + ".hrc";
            rl::save_coloring(out, *outcome.certificate);
            std::printf("certificate written to %s\n", out.c_str());
            return kExitClean;
        }
        case rl::SearchStatus::NotFound:
            std::printf("NOT FOUND => r_%d(%s) <= %d\n", k, p.name.c_str(), n);
            return kExitClean;
        case rl::SearchStatus::BudgetExceeded:
            std::printf("BUDGET EXCEEDED (no decision)\n");
            return kExitBudget;
    }
    return kExitClean;
}

int cmd_turan(const std::string& pattern_name, int n, std::uint64_t budget,
              const std::string& out) {
    rl::Pattern p = rl::parse_pattern(pattern_name);
    rl::TuranResult tr = rl::turan_number(p, n, budget);
    std::printf("nodes explored: %llu\n", static_cast<unsigned long long>(tr.nodes));
    if (!out.empty()) {
        rl::Coloring witness(p.uniformity(), n, 1);
        for (std::uint64_t e : tr.witness.edges) witness.colors[e] = 0;
        rl::save_coloring(out, witness);
        std::printf("witness written to %s\n", out.c_str());
    }
    if (tr.exact) {
        std::printf("ex(%d,%s) = %llu\n", n, p.name.c_str(),
                    static_cast<unsigned long long>(tr.value));
        return kExitClean;
    }
    std::printf("ex(%d,%s) >= %llu (budget exceeded, inexact)\n", n, p.name.c_str(),
                static_cast<unsigned long long>(tr.value));
    return kExitBudget;
}

int cmd_bounds(const std::string& pattern_name, int k, const rl::BoundsBudgets& budgets) {
    rl::Pattern p = rl::parse_pattern(pattern_name);
    rl::RamseyBounds rb = rl::ramsey_bounds(p, k, budgets);
    std::string lo = rb.lower ? std::to_string(*rb.lower) : "?";
    std::string hi = rb.upper ? std::to_string(*rb.upper) : "?";
    std::printf("r_%d(%s) in [%s, %s]\n", k, p.name.c_str(), lo.c_str(), hi.c_str());
    if (rb.lower) std::printf("  lower: %s\n", rb.lower_provenance.c_str());
    if (rb.upper) std::printf("  upper: %s\n", rb.upper_provenance.c_str());
    return kExitClean;
}

int cmd_design_find(int t, int v, int block_size, int lambda, std::uint64_t budget,
                    const std::string& out) {
    rl::DesignSearchResult res = rl::find_design(t, v, block_size, static_cast<std::uint64_t>(lambda), budget);
    std::printf("nodes explored: %llu\n", static_cast<unsigned long long>(res.nodes));
    if (res.status == rl::SearchStatus::BudgetExceeded) {
        std::printf("BUDGET EXCEEDED\n");
        return kExitBudget;
    }
    if (res.status != rl::SearchStatus::Found) {
        std::printf("NOT FOUND%s%s\n", res.note.empty() ? "" : ": ", res.note.c_str());
        return kExitWitness;
    }
    std::printf("FOUND %d-(%d,%d,%d) design with %zu blocks\n", t, v, block_size, lambda,
                res.design->block_count());
    if (!out.empty()) {
        rl::save_design(out, *res.design);
        std::printf("design written to %s\n", out.c_str());
    }
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramseylab: colorings, designs and exact searches for small hypergraph "
                 "Ramsey problems"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring file against a pattern");
    std::string v_pattern, v_file, v_cert;
    verify->add_option("--pattern", v_pattern, "pattern name")->required();
    auto* vf = verify->add_option("--file", v_file, "HRC1 coloring file");
    verify->add_option("--cert", v_cert, "catalog certificate name")->excludes(vf);

    // construct
    auto* construct = app.add_subcommand("construct", "build a coloring and self-verify it");
    ConstructArgs c_args;
    construct->add_option("name", c_args.name,
                          "stepping-up | k43e | sum-mod | kneser | random-cover | pasch-host | "
                          "certificate | design-coloring")
        ->required();
    construct->add_option("--out", c_args.out, "output HRC1 path")->required();
    construct->add_option("--input", c_args.input, "input coloring (stepping-up, k43e)");
    construct->add_option("--n", c_args.n, "vertex count (sum-mod)");
    construct->add_option("--m", c_args.m, "modulus (sum-mod)");
    construct->add_option("--r", c_args.r, "uniformity (kneser)");
    construct->add_option("--k", c_args.k, "colors (kneser, random-cover)");
    construct->add_option("--base", c_args.base, "template hypergraph file (random-cover)");
    construct->add_option("--seed", c_args.seed, "PRNG seed, required for random-cover")
        ->each([&c_args](const std::string&) { c_args.seed_set = true; });
    construct->add_option("--retries", c_args.retries, "random-cover redraw limit");
    construct->add_option("--check-pattern", c_args.check_pattern,
                          "verify random-cover classes against this pattern");
    construct->add_option("--q", c_args.q, "projective plane order (pasch-host)");
    construct->add_option("--name", c_args.cert_name, "certificate name");
    construct->add_option("--design", c_args.design, "DES1 design file (design-coloring)");
    construct->add_option("--mode", c_args.mode, "design-coloring mode: resolve | pairs");
    construct->add_option("--budget", c_args.budget, "node budget (design-coloring)");

    // search
    auto* search = app.add_subcommand("search", "look for a coloring without monochromatic copies");
    std::string s_pattern, s_out;
    int s_k = 0, s_n = 0, s_threads = 1;
    std::uint64_t s_budget = 1'000'000'000;
    search->add_option("--pattern", s_pattern)->required();
    search->add_option("--k", s_k, "colors")->required();
    search->add_option("--n", s_n, "host vertices")->required();
    search->add_option("--budget", s_budget, "node budget");
    search->add_option("--threads", s_threads, "worker threads (default 1, reproducible)");
    search->add_option("--out", s_out, "where to write a found certificate");

    // turan
    auto* turan = app.add_subcommand("turan", "exact Turan number by branch and bound");
    std::string t_pattern, t_out;
    int t_n = 0;
    std::uint64_t t_budget = 1'000'000'000;
    turan->add_option("--pattern", t_pattern)->required();
    turan->add_option("--n", t_n, "host vertices")->required();
    turan->add_option("--budget", t_budget, "node budget");
    turan->add_option("--out", t_out, "where to write the extremal witness");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "tightest verified interval for r_k(pattern)");
    std::string b_pattern;
    int b_k = 0;
    rl::BoundsBudgets b_budgets;
    bounds->add_option("--pattern", b_pattern)->required();
    bounds->add_option("--k", b_k, "colors")->required();
    bounds->add_option("--search-budget", b_budgets.search_nodes);
    bounds->add_option("--turan-budget", b_budgets.turan_nodes);
    bounds->add_option("--design-budget", b_budgets.design_nodes);
    bounds->add_option("--turan-cap", b_budgets.turan_cap);
    bounds->add_option("--max-search-n", b_budgets.max_search_host);
    bounds->add_option("--threads", b_budgets.threads);

    // design-find
    auto* dfind = app.add_subcommand("design-find", "backtracking t-(v,b,lambda) design search");
    int d_t = 0, d_v = 0, d_bs = 0, d_lambda = 1;
    std::uint64_t d_budget = 100'000'000;
    std::string d_out;
    dfind->add_option("--t", d_t)->required();
    dfind->add_option("--v", d_v)->required();
    dfind->add_option("--block-size", d_bs)->required();
    dfind->add_option("--lambda", d_lambda);
    dfind->add_option("--budget", d_budget);
    dfind->add_option("--out", d_out, "where to write the design");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (v_file.empty() && v_cert.empty())
                throw CLI::ValidationError("verify needs --file or --cert");
            return cmd_verify(v_pattern, v_file, v_cert);
        }
        if (*construct) return cmd_construct(c_args);
        if (*search) return cmd_search(s_pattern, s_k, s_n, s_budget, s_threads, s_out);
        if (*turan) return cmd_turan(t_pattern, t_n, t_budget, t_out);
        if (*bounds) return cmd_bounds(b_pattern, b_k, b_budgets);
        if (*dfind) return cmd_design_find(d_t, d_v, d_bs, d_lambda, d_budget, d_out);
    } catch (const rl::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitWitness;
    }
    return kExitClean;
}
