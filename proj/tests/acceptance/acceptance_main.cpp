// End-to-end acceptance suite: one pass/fail line per criterion, exit code =
// number of unexpected failures. Criterion 11 encodes a stated expectation
// ((-2)-girth of the Fano plane = 7) that exhaustive search refutes (the
// answer is 6, witnessed by a Pasch configuration); it is reported honestly
// and counted as a known discrepancy, with the corrected value checked in
// tests/test_neg_girth.cpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hygirth/bounds.hpp"
#include "hygirth/constructions.hpp"
#include "hygirth/error.hpp"
#include "hygirth/experiment.hpp"
#include "hygirth/girth.hpp"
#include "hygirth/io.hpp"
#include "hygirth/neg_girth.hpp"
#include "hygirth/randmodels.hpp"
#include "hygirth/rng.hpp"
#include "test_util.hpp"

using namespace hygirth;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome* out;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            out->pass = false;
            if (!out->detail.empty()) out->detail += "; ";
            out->detail += what;
        }
    }
};

// ---- shared corpus -------------------------------------------------------

struct LabeledInstance {
    Hypergraph h;
    int r = 0;
    int d = 0;
};

std::vector<LabeledInstance> regular_corpus() {
    std::vector<LabeledInstance> out;
    for (int r : {3, 4, 5})
        for (int d : {2, 3}) out.push_back({grid_hypergraph(r, d), r, d});
    out.push_back({fixtures::fano(), 3, 3});
    out.push_back({midpoint_construction(fixtures::petersen()), 3, 2});
    out.push_back({midpoint_construction(fixtures::k4()), 3, 2});
    out.push_back({star_partition_construction(fixtures::k44(), 3, 1), 3, 3});
    Rng rng = make_rng(1001);
    for (int t = 0; t < 4; ++t)
        out.push_back({random_two_cover(fixtures::fano(), rng).cover, 3, 3});
    for (int t = 0; t < 4; ++t)
        out.push_back({random_two_cover(grid_hypergraph(3, 2), rng).cover, 3, 2});
    for (int g : {5, 6}) {
        Rng lr = make_rng(7);
        out.push_back({lift_to_girth(grid_hypergraph(3, 2), g, lr), 3, 2});
    }
    return out;
}

// ---- criteria ------------------------------------------------------------

Outcome criterion1_oracle_equivalence() {
    Outcome out;
    Check c{&out};
    std::vector<Hypergraph> corpus;
    for (const auto& inst : regular_corpus()) corpus.push_back(inst.h);
    Rng rng = make_rng(4242);
    while (corpus.size() < 520) {
        int n = 12 + 6 * static_cast<int>(rng() % 9);  // 12..60, r | n*d
        MultiHypergraph s = sample_config_model(n, 3, 2, rng);
        if (s.has_repeated_vertex()) continue;
        std::vector<std::vector<int>> dedup;
        for (const auto& e : s.edges())
            if (std::find(dedup.begin(), dedup.end(), e) == dedup.end())
                dedup.push_back(e);
        corpus.emplace_back(s.n(), dedup);
    }
    int mismatches = 0;
    for (const Hypergraph& h : corpus) {
        if (h.m() > 80) continue;
        GirthResult fast = berge_girth(h);
        GirthResult slow = berge_girth_oracle(h, std::min(h.n(), h.m()));
        const bool same = fast.kind == slow.kind &&
                          (!fast.finite() || fast.value == slow.value);
        if (!same) ++mismatches;
        if (fast.finite() && !validate_cycle(h, *fast.witness)) ++mismatches;
    }
    c.require(corpus.size() >= 500, "corpus smaller than 500");
    c.require(mismatches == 0,
              "girth mismatches: " + std::to_string(mismatches));
    return out;
}

Outcome criterion2_moore_consistency() {
    Outcome out;
    Check c{&out};
    int violations = 0;
    for (const auto& inst : regular_corpus()) {
        if (!inst.h.is_linear() || !inst.h.is_uniform(inst.r) ||
            !inst.h.is_regular(inst.d))
            continue;
        GirthResult g = berge_girth(inst.h);
        if (!g.finite()) continue;
        if (BigInt(inst.h.n()) < moore_min_vertices(inst.r, inst.d, g.value))
            ++violations;
        if (static_cast<double>(g.value) >
            girth_upper_bound(inst.h.n(), inst.r, inst.d))
            ++violations;
    }
    c.require(violations == 0, "bound violations: " + std::to_string(violations));
    return out;
}

Outcome criterion3_grid() {
    Outcome out;
    Check c{&out};
    Hypergraph g32 = grid_hypergraph(3, 2);
    c.require(g32.n() == 9, "grid(3,2) vertex count");
    c.require(g32.m() == 6, "grid(3,2) edge count");
    GirthResult g = berge_girth(g32);
    c.require(g.finite() && g.value == 4, "grid(3,2) girth");
    c.require(count_cycles(g32, 4) == 9, "grid(3,2) 4-cycle count");
    for (int r : {3, 4, 5})
        for (int d : {2, 3}) {
            Hypergraph h = grid_hypergraph(r, d);
            c.require(h.is_linear(), "grid linearity");
            c.require(h.is_regular(d), "grid regularity");
        }
    return out;
}

Outcome criterion4_cover_laws() {
    Outcome out;
    Check c{&out};
    Hypergraph base = grid_hypergraph(3, 2);

    CoverMap triv = trivial_cover(base);
    for (int l = 2; l <= 6; ++l)
        c.require(count_cycles(triv.cover, l) == 2 * count_cycles(base, l),
                  "trivial cover 2M law at l=" + std::to_string(l));

    const long long m4 = count_cycles(base, 4);  // 9
    const int covers = 2000;
    Rng rng = make_rng(777);
    long long survived = 0;
    long long total_count = 0;
    int girth_drops = 0;
    for (int t = 0; t < covers; ++t) {
        CoverMap cov = random_two_cover(base, rng);
        long long cnt = count_cycles(cov.cover, 4);
        total_count += cnt;
        survived += cnt / 2;  // each surviving base 4-cycle lifts to two copies
        GirthResult g = berge_girth(cov.cover, 3);
        if (g.finite()) ++girth_drops;
    }
    // survived ~ Binomial(covers * m4, 1/2).
    const double trials = static_cast<double>(covers) * m4;
    const double sigma = std::sqrt(trials * 0.25);
    c.require(std::abs(survived - trials * 0.5) < 4 * sigma,
              "per-cycle split probability off 0.5 by > 4 sigma");
    // Per cover the count is 2 * Binomial(m4, 1/2): mean m4, variance m4.
    const double mean = total_count / static_cast<double>(covers);
    c.require(std::abs(mean - m4) < 4 * std::sqrt(static_cast<double>(m4) / covers),
              "mean short-cycle count off M by > 4 sigma");
    c.require(girth_drops == 0, "girth decreased under covering");
    return out;
}

Outcome criterion5_lift() {
    Outcome out;
    Check c{&out};
    for (int target : {5, 6}) {
        int successes = 0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Rng rng = make_rng(mix_seed(100, seed));
            try {
                Hypergraph lifted = lift_to_girth(grid_hypergraph(3, 2), target, rng);
                GirthResult g = berge_girth(lifted);
                if (lifted.is_linear() && lifted.is_regular(2) &&
                    lifted.is_uniform(3) && g.finite() && g.value >= target)
                    ++successes;
            } catch (const Error&) {
            }
        }
        c.require(successes >= 9, "lift to girth " + std::to_string(target) +
                                      " succeeded only " +
                                      std::to_string(successes) + "/10");
    }
    return out;
}

Outcome criterion6_surgery() {
    Outcome out;
    Check c{&out};
    int applied = 0;
    for (int s : {16, 20, 30}) {
        const int g = 4;
        Hypergraph h = midpoint_construction(fixtures::prism(s));
        while (auto next = surgery_step(h, g)) {
            ++applied;
            c.require(next->n() == h.n() - 3, "vertex count drop");
            c.require(next->is_linear(), "linearity after surgery");
            c.require(next->is_regular(2), "regularity after surgery");
            GirthResult gr = berge_girth(*next, g - 1);
            c.require(!gr.finite(), "girth after surgery");
            h = *next;
        }
    }
    c.require(applied > 0, "no applicable surgery instance found");
    c.require(!surgery_step(fixtures::fano(), 3).has_value(),
              "fano admitted a scattered triple");
    return out;
}

Outcome criterion7_graph_derived() {
    Outcome out;
    Check c{&out};
    Hypergraph mp = midpoint_construction(fixtures::petersen());
    GirthResult g = berge_girth(mp);
    c.require(mp.n() == 15 && mp.is_uniform(3) && mp.is_regular(2),
              "midpoint(Petersen) shape");
    c.require(g.finite() && g.value == 5, "midpoint(Petersen) girth");
    GirthResult gk = berge_girth(midpoint_construction(fixtures::k4()));
    c.require(gk.finite() && gk.value == 3, "midpoint(K4) girth");
    Hypergraph sp = star_partition_construction(fixtures::k44(), 3, 1);
    GirthResult gs = berge_girth(sp);
    c.require(sp.is_uniform(3) && sp.is_regular(3) && sp.m() == 8,
              "star_partition(K44) shape");
    c.require(!gs.finite() || gs.value >= 2, "star_partition girth");
    return out;
}

Outcome criterion8_x_machinery() {
    Outcome out;
    Check c{&out};
    // Exhaustive enumeration of X(6, 3).
    long long members = 0;
    for (std::uint64_t rank = 0; rank < factorial_u64(6); ++rank)
        if (cycle_type(perm_unrank(6, rank)) == std::vector<int>{3, 3}) ++members;
    c.require(members == 40 && x_size(6, 3) == 40, "x_size(6,3)");

    // Chi-squared uniformity at the 1e-3 level (39 dof -> 72.055).
    Rng rng = make_rng(90210);
    std::map<std::uint64_t, long long> counts;
    const long long draws = 100'000;
    for (long long t = 0; t < draws; ++t) counts[perm_rank(sample_X(6, 3, rng))]++;
    double chi2 = 0.0;
    const double expected = draws / 40.0;
    for (auto [rank, cnt] : counts) {
        const double dev = cnt - expected;
        chi2 += dev * dev / expected;
    }
    c.require(counts.size() == 40, "sampler missed outcomes");
    c.require(chi2 < 72.055, "chi-squared " + std::to_string(chi2));

    // Power law: tau^k has gcd(k,r) * n/r cycles of length r/gcd(k,r);
    // exhaustive for n <= 8.
    for (auto [n, r] : std::vector<std::pair<int, int>>{
             {4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}}) {
        for (std::uint64_t rank = 0; rank < factorial_u64(n); ++rank) {
            Permutation p = perm_unrank(n, rank);
            if (cycle_type(p) != std::vector<int>(n / r, r)) continue;
            for (int k = 1; k < r; ++k) {
                const int gc = std::gcd(k, r);
                if (cycle_type(perm_power(p, k)) !=
                    std::vector<int>((n / r) * gc, r / gc)) {
                    c.require(false, "power law failed");
                    return out;
                }
            }
        }
    }
    return out;
}

Outcome criterion9_cayley() {
    Outcome out;
    Check c{&out};
    Rng rng = make_rng(2026);
    for (int seed_count = 0; seed_count < 20; ++seed_count) {
        for (int d : {2, 3}) {
            CayleySpec spec = sample_cayley_spec(6, 3, d, rng);
            if (!check_condition6(spec)) continue;
            Hypergraph h = cayley_hypergraph(spec);
            c.require(h.n() == 720, "vertex count");
            c.require(h.m() == d * 240, "edge count");
            c.require(h.is_linear(), "linearity");
            c.require(h.is_regular(d), "regularity");
            GirthResult fast = cayley_girth(spec, 30);
            GirthResult slow = berge_girth(h);
            c.require(fast.finite() && slow.finite() && fast.value == slow.value,
                      "cayley_girth != berge_girth");
        }
    }
    return out;
}

Outcome criterion10_config_distribution() {
    Outcome out;
    Check c{&out};
    ExperimentSpec spec;
    spec.model = "config";
    spec.n = 60;
    spec.r = 3;
    spec.d = 2;
    spec.g_max = 5;
    spec.trials = 90'000;
    spec.seed = 424242;
    ExperimentResult res = run_experiment(spec);
    c.require(res.accepted_trials >= 10'000,
              "accepted trials: " + std::to_string(res.accepted_trials));
    double emp4 = 0.0;
    for (const auto& row : res.rows)
        if (row.g == 4) emp4 = row.empirical;
    const double target = std::exp(-4.0 / 3.0);
    c.require(std::abs(emp4 - target) <= 0.05,
              "empirical P(girth>=4|linear) = " + std::to_string(emp4) +
                  " vs " + std::to_string(target));
    // The paper-variant prediction is present in the same table.
    for (const auto& row : res.rows)
        c.require(row.paper_pred > 0.0, "missing paper-variant prediction");
    return out;
}

Outcome criterion11_neg_girth() {
    Outcome out;
    Check c{&out};
    NegGirthResult r = minus_k_girth(fixtures::fano(), 2, 10);
    c.require(r.found() && *r.g == 7,
              "stated expectation 7, computed " +
                  (r.found() ? std::to_string(*r.g) : std::string("none")) +
                  " (exhaustive search: 6 points of a Pasch configuration "
                  "span 4 lines)");
    if (r.found()) {
        const Hypergraph fano = fixtures::fano();
        std::vector<char> in(7, 0);
        for (int v : r.witness) in[v] = 1;
        int spanned = 0;
        for (const auto& e : fano.edges())
            if (in[e[0]] && in[e[1]] && in[e[2]]) ++spanned;
        c.require(static_cast<int>(r.witness.size()) == *r.g &&
                      spanned >= *r.g - 2,
                  "witness invalid");
    }
    // Non-linear 3-uniform instances: (-2)-girth exactly 4; never 4 on
    // linear ones.
    Rng rng = make_rng(31337);
    for (int t = 0; t < 40; ++t) {
        std::vector<std::vector<int>> edges;
        while (edges.size() < 6) {
            std::vector<int> verts(9);
            std::iota(verts.begin(), verts.end(), 0);
            std::shuffle(verts.begin(), verts.end(), rng);
            std::vector<int> e(verts.begin(), verts.begin() + 3);
            std::sort(e.begin(), e.end());
            if (std::find(edges.begin(), edges.end(), e) == edges.end())
                edges.push_back(e);
        }
        Hypergraph h(9, edges);
        NegGirthResult rr = minus_k_girth(h, 2, 9);
        if (h.is_linear())
            c.require(!rr.found() || *rr.g > 4, "linear instance scored 4");
        else
            c.require(rr.found() && *rr.g == 4, "non-linear instance missed 4");
    }
    return out;
}

Outcome criterion12_determinism() {
    Outcome out;
    Check c{&out};

    auto hyg_bytes = [](const Hypergraph& h) {
        std::ostringstream s;
        write_hyg(s, h);
        return s.str();
    };

    for (std::uint64_t seed : {1ULL, 99ULL}) {
        Rng a = make_rng(seed), b = make_rng(seed);
        std::ostringstream sa, sb;
        write_hyg(sa, sample_config_model(30, 3, 2, a));
        write_hyg(sb, sample_config_model(30, 3, 2, b));
        c.require(sa.str() == sb.str(), "config sample bytes differ");

        Rng la = make_rng(seed), lb = make_rng(seed);
        c.require(hyg_bytes(lift_to_girth(grid_hypergraph(3, 2), 5, la)) ==
                      hyg_bytes(lift_to_girth(grid_hypergraph(3, 2), 5, lb)),
                  "lift bytes differ");
    }

    ExperimentSpec spec;
    spec.model = "config";
    spec.n = 30;
    spec.r = 3;
    spec.d = 2;
    spec.g_max = 4;
    spec.trials = 500;
    spec.seed = 5;
    spec.jobs = 3;
    std::ostringstream c1, c2;
    write_experiment_csv(c1, run_experiment(spec));
    spec.jobs = 1;
    write_experiment_csv(c2, run_experiment(spec));
    c.require(c1.str() == c2.str(), "experiment CSV bytes differ across jobs");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        bool known_discrepancy = false;
    };
    const std::vector<Criterion> criteria = {
        {"01 girth oracle equivalence", criterion1_oracle_equivalence},
        {"02 moore-bound consistency", criterion2_moore_consistency},
        {"03 grid construction", criterion3_grid},
        {"04 cover laws", criterion4_cover_laws},
        {"05 lift to girth 5 and 6", criterion5_lift},
        {"06 erdos-sachs surgery", criterion6_surgery},
        {"07 graph-derived constructions", criterion7_graph_derived},
        {"08 X(n,r) machinery", criterion8_x_machinery},
        {"09 cayley hypergraphs at n=6", criterion9_cayley},
        {"10 config-model girth distribution", criterion10_config_distribution},
        {"11 (-2)-girth (stated value disputed)", criterion11_neg_girth, true},
        {"12 seeded determinism", criterion12_determinism},
    };

    int unexpected_failures = 0;
    for (const auto& crit : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = crit.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::ostringstream line;
        line << (out.pass ? "PASS" : (crit.known_discrepancy ? "FAIL (known)" : "FAIL"))
             << "  " << crit.name << "  [" << std::fixed << secs << "s]";
        if (!out.detail.empty()) line << "  -- " << out.detail;
        std::cout << line.str() << std::endl;
        if (!out.pass && !crit.known_discrepancy) ++unexpected_failures;
    }
    if (unexpected_failures > 0)
        std::cout << unexpected_failures << " unexpected failure(s)" << std::endl;
    return unexpected_failures;
}
