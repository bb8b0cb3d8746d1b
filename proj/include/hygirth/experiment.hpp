#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hygirth {

// Seeded Monte Carlo job over one of the random models. Trial i derives its
// RNG from mix_seed(seed, i), so results are independent of scheduling.
struct ExperimentSpec {
    std::string model;  // "config" or "cayley"
    int n = 0;
    int r = 0;
    int d = 0;
    int g_max = 6;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::string output;  // CSV path (CLI only; empty = caller handles output)
    int jobs = 0;        // 0 = logical cores

    void validate() const;
};

struct ExperimentRow {
    int g = 0;
    long long accepted = 0;      // trials entering the conditional estimate
    long long successes = 0;     // accepted trials with girth >= g
    double empirical = 0.0;
    double poisson_pred = 0.0;
    double paper_pred = 0.0;
    double stderr_ = 0.0;  // binomial standard error of the empirical estimate
};

struct ExperimentResult {
    ExperimentSpec spec;
    long long total_trials = 0;
    long long accepted_trials = 0;  // config: linear simple samples; cayley: condition-(6) specs
    std::vector<ExperimentRow> rows;
    double wall_seconds = 0.0;
};

// Runs the experiment with a worker pool (spec.jobs threads, or the
// HYGIRTH_JOBS override / logical core count when 0).
ExperimentResult run_experiment(const ExperimentSpec& spec);

// CSV with a `# seed=<s> version=<v>` comment line and a header row.
void write_experiment_csv(std::ostream& out, const ExperimentResult& result);

extern const char* const kVersion;

}  // namespace hygirth
