#include "hygirth/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

#include "hygirth/error.hpp"
#include "hygirth/girth.hpp"
#include "hygirth/randmodels.hpp"
#include "hygirth/rng.hpp"

namespace hygirth {

const char* const kVersion = "0.1.0";

void ExperimentSpec::validate() const {
    if (model != "config" && model != "cayley")
        fail("InvalidParams", "model must be 'config' or 'cayley'");
    if (trials < 1) fail("InvalidParams", "trials must be >= 1");
    if (g_max < 3) fail("InvalidParams", "g_max must be >= 3");
    if (model == "config") {
        if (n < 1 || r < 2 || d < 1 || (static_cast<long long>(n) * d) % r != 0)
            fail("InvalidParams", "config model needs r | n*d");
    } else {
        if (r < 3 || n % r != 0 || d < 2)
            fail("InvalidParams", "cayley model needs r >= 3, r | n, d >= 2");
    }
}

namespace {

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYGIRTH_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct TrialOutcome {
    bool accepted = false;
    int girth = 0;  // INT_MAX encodes "no cycle within scope"
};

TrialOutcome run_trial(const ExperimentSpec& spec, long long index) {
    Rng rng = make_rng(mix_seed(spec.seed, static_cast<std::uint64_t>(index)));
    TrialOutcome out;
    if (spec.model == "config") {
        MultiHypergraph sample = sample_config_model(spec.n, spec.r, spec.d, rng);
        if (!sample.is_simple_linear()) return out;
        out.accepted = true;
        GirthResult g = berge_girth(sample.to_hypergraph());
        out.girth = g.finite() ? g.value : std::numeric_limits<int>::max();
    } else {
        CayleySpec cs = sample_cayley_spec(spec.n, spec.r, spec.d, rng);
        if (!check_condition6(cs)) return out;
        out.accepted = true;
        GirthResult g = cayley_girth(cs, spec.g_max);
        out.girth = g.finite() ? g.value : std::numeric_limits<int>::max();
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(spec.trials));
    const int jobs = resolve_jobs(spec.jobs);
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= spec.trials) return;
            outcomes[static_cast<std::size_t>(i)] = run_trial(spec, i);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ExperimentResult result;
    result.spec = spec;
    result.total_trials = spec.trials;
    for (const auto& o : outcomes)
        if (o.accepted) ++result.accepted_trials;

    for (int g = 3; g <= spec.g_max; ++g) {
        ExperimentRow row;
        row.g = g;
        row.accepted = result.accepted_trials;
        for (const auto& o : outcomes)
            if (o.accepted && o.girth >= g) ++row.successes;
        if (row.accepted > 0) {
            const double p = static_cast<double>(row.successes) / static_cast<double>(row.accepted);
            row.empirical = p;
            row.stderr_ = std::sqrt(p * (1.0 - p) / static_cast<double>(row.accepted));
        } else {
            row.empirical = std::numeric_limits<double>::quiet_NaN();
            row.stderr_ = std::numeric_limits<double>::quiet_NaN();
        }
        if (spec.model == "config") {
            row.poisson_pred = girth_prob_poisson(spec.r, spec.d, g);
            row.paper_pred = girth_prob_paper(spec.r, spec.d, g);
        } else {
            row.poisson_pred = std::numeric_limits<double>::quiet_NaN();
            row.paper_pred = std::numeric_limits<double>::quiet_NaN();
        }
        result.rows.push_back(row);
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& result) {
    out << "# seed=" << result.spec.seed << " version=" << kVersion << '\n';
    out << "# model=" << result.spec.model << " n=" << result.spec.n << " r=" << result.spec.r
        << " d=" << result.spec.d << " trials=" << result.total_trials
        << " accepted=" << result.accepted_trials << '\n';
    if (result.accepted_trials == 0) out << "# warning: no accepted trials\n";
    out << "g,accepted_trials,empirical,poisson_pred,paper_pred,stderr\n";
    out << std::setprecision(10);
    for (const auto& row : result.rows)
        out << row.g << ',' << row.accepted << ',' << row.empirical << ',' << row.poisson_pred
            << ',' << row.paper_pred << ',' << row.stderr_ << '\n';
}

}  // namespace hygirth
