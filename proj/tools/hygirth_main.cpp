#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hygirth/bounds.hpp"
#include "hygirth/constructions.hpp"
#include "hygirth/error.hpp"
#include "hygirth/experiment.hpp"
#include "hygirth/girth.hpp"
#include "hygirth/io.hpp"
#include "hygirth/neg_girth.hpp"
#include "hygirth/randmodels.hpp"
#include "hygirth/rng.hpp"

namespace {

using namespace hygirth;

void print_girth(const GirthResult& g) {
    switch (g.kind) {
        case GirthResult::Kind::Finite: {
            std::cout << "girth " << g.value << '\n';
            if (g.witness) {
                std::cout << "edges";
                for (int e : g.witness->edge_indices) std::cout << ' ' << e;
                std::cout << "\nvertices";
                for (int v : g.witness->witness_vertices) std::cout << ' ' << v;
                std::cout << '\n';
            }
            break;
        }
        case GirthResult::Kind::Infinite:
            std::cout << "girth infinite\n";
            break;
        case GirthResult::Kind::Truncated:
            std::cout << "girth > " << g.value << '\n';
            break;
    }
}

int cmd_girth(const std::string& file, std::optional<int> cap) {
    Hypergraph h = read_simple_hyg_file(file);
    print_girth(berge_girth(h, cap));
    return 0;
}

int cmd_construct_grid(int r, int d, const std::string& out) {
    write_hyg_file(out, grid_hypergraph(r, d));
    return 0;
}

int cmd_construct_midpoint(const std::string& in, const std::string& out) {
    write_hyg_file(out, midpoint_construction(read_elg_file(in)));
    return 0;
}

int cmd_construct_stars(const std::string& in, int r, int s, const std::string& out) {
    write_hyg_file(out, star_partition_construction(read_elg_file(in), r, s));
    return 0;
}

int cmd_lift(const std::string& file, int g, std::uint64_t seed, int budget,
             const std::string& out) {
    Hypergraph h = read_simple_hyg_file(file);
    Rng rng = make_rng(seed);
    LiftOptions opts;
    opts.attempts_per_round = budget;
    opts.log = &std::cout;
    write_hyg_file(out, lift_to_girth(h, g, rng, opts));
    return 0;
}

int cmd_surgery(const std::string& file, int g, const std::string& out) {
    Hypergraph h = read_simple_hyg_file(file);
    SurgeryLog log = surgery_minimize(h, g, &std::cout);
    const auto r = log.result.uniformity();
    if (r) {
        const int d = log.result.n() > 0 ? log.result.degree(0) : 0;
        std::cout << "surgery: final vertices " << log.result.n() << ", existence bound "
                  << es_vertex_upper(*r, d, g).exact << '\n';
    }
    write_hyg_file(out, log.result);
    return 0;
}

int cmd_bounds(long long n, int r, int d, int g_max, bool csv) {
    BoundsReport rep = bounds_report(n, r, d, g_max);
    if (csv) {
        std::cout << "# version=" << kVersion << '\n';
        std::cout << "key,g,value\n";
        for (const auto& [g, v] : rep.moore_table) std::cout << "moore_min_vertices," << g << ',' << v << '\n';
        for (const auto& [g, v] : rep.es_table) {
            std::cout << "es_vertex_upper_exact," << g << ',' << v.exact << '\n';
            std::cout << "es_vertex_upper_crude," << g << ',' << v.crude << '\n';
        }
        std::cout << "girth_upper_bound,," << rep.girth_upper << '\n';
        std::cout << "girth_lower_bound_existential,," << rep.girth_lower_exist << '\n';
        if (rep.n % rep.r == 0)
            std::cout << "cayley_girth_bound_c0_" << rep.cayley_bound_c0 << ",," << rep.cayley_bound << '\n';
    } else {
        std::cout << "n " << rep.n << "\nr " << rep.r << "\nd " << rep.d << '\n';
        for (const auto& [g, v] : rep.moore_table) std::cout << "moore_min_vertices[" << g << "] " << v << '\n';
        for (const auto& [g, v] : rep.es_table)
            std::cout << "es_vertex_upper[" << g << "] " << v.exact << " (crude " << v.crude << ")\n";
        std::cout << "girth_upper_bound " << rep.girth_upper << '\n';
        std::cout << "girth_lower_bound_existential " << rep.girth_lower_exist << '\n';
        if (rep.n % rep.r == 0)
            std::cout << "cayley_girth_bound(c0=" << rep.cayley_bound_c0 << ") " << rep.cayley_bound << '\n';
    }
    return 0;
}

int cmd_sample_cayley(int n, int r, int d, std::uint64_t seed, bool girth_only,
                      const std::string& out) {
    Rng rng = make_rng(seed);
    CayleySpec spec = sample_cayley_spec(n, r, d, rng);
    if (!check_condition6(spec)) fail("Condition6Violated", "sampled generators violate condition (6)");
    if (girth_only) {
        print_girth(cayley_girth(spec, 2 * n));
        return 0;
    }
    write_hyg_file(out, cayley_hypergraph(spec));
    return 0;
}

int cmd_sample_config(int n, int r, int d, std::uint64_t seed, const std::string& out) {
    Rng rng = make_rng(seed);
    write_hyg_file(out, sample_config_model(n, r, d, rng));
    return 0;
}

int cmd_experiment(const std::string& spec_file, int jobs) {
    std::ifstream in(spec_file);
    if (!in) fail("ParseError", "cannot open " + spec_file);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string("bad experiment spec: ") + e.what());
    }
    ExperimentSpec spec;
    try {
        spec.model = j.at("model").get<std::string>();
        spec.n = j.at("n").get<int>();
        spec.r = j.at("r").get<int>();
        spec.d = j.at("d").get<int>();
        spec.g_max = j.value("g_max", 6);
        spec.trials = j.at("trials").get<long long>();
        spec.seed = j.at("seed").get<std::uint64_t>();
        spec.output = j.at("output").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string("bad experiment spec: ") + e.what());
    }
    spec.jobs = jobs;
    ExperimentResult result = run_experiment(spec);
    std::ofstream out(spec.output);
    if (!out) fail("ParseError", "cannot open " + spec.output + " for writing");
    write_experiment_csv(out, result);
    std::cout << "experiment: " << result.accepted_trials << "/" << result.total_trials
              << " accepted, " << result.wall_seconds << " s, wrote " << spec.output << '\n';
    return 0;
}

int cmd_neggirth(const std::string& file, int k, int cap) {
    Hypergraph h = read_simple_hyg_file(file);
    NegGirthResult r = minus_k_girth(h, k, cap);
    if (!r.found()) {
        std::cout << "(-" << k << ")-girth not found (cap " << cap << ")\n";
        return 0;
    }
    std::cout << "(-" << k << ")-girth " << *r.g << '\n';
    std::cout << "witness";
    for (int v : r.witness) std::cout << ' ' << v;
    std::cout << "\nspanned_edges " << r.spanned_edges << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear regular hypergraphs of high Berge girth: analysis and constructions"};
    app.require_subcommand(1);

    std::string file, out = "out.hyg", graph_in, spec_file;
    std::optional<int> cap_opt;
    int r = 3, d = 2, s = 1, g = 3, g_max = 8, k = 2, cap = 12, budget = 200, jobs = 0;
    long long n = 9;
    std::uint64_t seed = 0;
    bool csv = false, girth_only = false;

    auto* girth_cmd = app.add_subcommand("girth", "exact Berge girth of a .hyg file");
    girth_cmd->add_option("file", file)->required();
    girth_cmd->add_option("--cap", cap_opt, "truncate the search at this length");

    auto* construct = app.add_subcommand("construct", "build a hypergraph and write .hyg");
    auto* grid_cmd = construct->add_subcommand("grid", "axis-parallel lines on Z_r^d");
    grid_cmd->add_option("--r", r)->required();
    grid_cmd->add_option("--d", d)->required();
    grid_cmd->add_option("--out", out);
    auto* mid_cmd = construct->add_subcommand("midpoint", "3-regular graph to 3-uniform hypergraph");
    mid_cmd->add_option("file", graph_in)->required();
    mid_cmd->add_option("--out", out);
    auto* stars_cmd = construct->add_subcommand("stars", "star partition of a bipartite regular graph");
    stars_cmd->add_option("file", graph_in)->required();
    stars_cmd->add_option("--r", r)->required();
    stars_cmd->add_option("--s", s)->required();
    stars_cmd->add_option("--out", out);
    construct->require_subcommand(1);

    auto* lift_cmd = app.add_subcommand("lift", "boost girth with random 2-covers");
    lift_cmd->add_option("file", file)->required();
    lift_cmd->add_option("--girth", g)->required();
    lift_cmd->add_option("--seed", seed);
    lift_cmd->add_option("--budget", budget, "cover attempts per round");
    lift_cmd->add_option("--out", out);

    auto* surgery_cmd = app.add_subcommand("surgery", "shrink vertex count, keeping girth >= g");
    surgery_cmd->add_option("file", file)->required();
    surgery_cmd->add_option("--girth", g)->required();
    surgery_cmd->add_option("--out", out);

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the girth/size bounds");
    bounds_cmd->add_option("--n", n)->required();
    bounds_cmd->add_option("--r", r)->required();
    bounds_cmd->add_option("--d", d)->required();
    bounds_cmd->add_option("--g", g_max, "largest g in the tables");
    bounds_cmd->add_flag("--csv", csv);

    auto* sample = app.add_subcommand("sample", "draw from a random model");
    auto* cayley_cmd = sample->add_subcommand("cayley", "random Cayley hypergraph on S_n");
    cayley_cmd->add_option("--n", n)->required();
    cayley_cmd->add_option("--r", r)->required();
    cayley_cmd->add_option("--d", d)->required();
    cayley_cmd->add_option("--seed", seed);
    cayley_cmd->add_flag("--girth-only", girth_only, "report girth without materializing S_n");
    cayley_cmd->add_option("--out", out);
    auto* config_cmd = sample->add_subcommand("config", "configuration-model multihypergraph");
    config_cmd->add_option("--n", n)->required();
    config_cmd->add_option("--r", r)->required();
    config_cmd->add_option("--d", d)->required();
    config_cmd->add_option("--seed", seed);
    config_cmd->add_option("--out", out);
    sample->require_subcommand(1);

    auto* exp_cmd = app.add_subcommand("experiment", "run a seeded Monte Carlo girth experiment");
    exp_cmd->add_option("spec", spec_file, "flat JSON experiment spec")->required();
    exp_cmd->add_option("--jobs", jobs, "worker threads (0 = logical cores)");

    auto* neg_cmd = app.add_subcommand("neggirth", "(-k)-girth of a 3-uniform hypergraph");
    neg_cmd->add_option("file", file)->required();
    neg_cmd->add_option("--k", k)->required();
    neg_cmd->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*girth_cmd) return cmd_girth(file, cap_opt);
        if (*grid_cmd) return cmd_construct_grid(r, d, out);
        if (*mid_cmd) return cmd_construct_midpoint(graph_in, out);
        if (*stars_cmd) return cmd_construct_stars(graph_in, r, s, out);
        if (*lift_cmd) return cmd_lift(file, g, seed, budget, out);
        if (*surgery_cmd) return cmd_surgery(file, g, out);
        if (*bounds_cmd) return cmd_bounds(n, r, d, g_max, csv);
        if (*cayley_cmd) return cmd_sample_cayley(static_cast<int>(n), r, d, seed, girth_only, out);
        if (*config_cmd) return cmd_sample_config(static_cast<int>(n), r, d, seed, out);
        if (*exp_cmd) return cmd_experiment(spec_file, jobs);
        if (*neg_cmd) return cmd_neggirth(file, k, cap);
    } catch (const hygirth::Error& e) {
        std::cerr << e.what() << '\n';
        return e.name() == "ParseError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
