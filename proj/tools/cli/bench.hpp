#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <vector>

#include "mlcseg/engel.hpp"
#include "mlcseg/instances.hpp"
#include "mlcseg/sequencing.hpp"

namespace mlcseg::cli {

struct BenchConfig {
    std::size_t rows = 15;
    std::size_t cols = 15;
    Intensity l_min = 3;
    Intensity l_max = 16;
    std::size_t reps = 1000;
    std::uint64_t seed = 0;
    // 0 = one worker per hardware thread.
    std::size_t threads = 0;
    bool exclusive_upper = false;
    std::size_t exact_k_bound = kDefaultExactBound;
    std::vector<Rule> rules{std::begin(kAllRules), std::end(kAllRules)};
};

// Throws std::invalid_argument on an empty L range, zero reps or zero dimensions.
void check_config(const BenchConfig& config);

// Instance `index` for intensity level L. Both modes draw the same matrices
// for the same (seed, L, index).
IntensityMatrix bench_instance(const BenchConfig& config, Intensity level, std::size_t index);

struct RulesRow {
    Intensity level = 0;
    Rule rule = Rule::Kali;
    std::size_t reps = 0;
    double mean_dc = 0.0;
    double mean_su = 0.0;
    double mean_su_opt = 0.0;
};

std::vector<RulesRow> bench_rules(const BenchConfig& config);

// Per-instance outcome of one two-phase run and its two baselines.
struct PplsInstance {
    Intensity complexity = 0;
    std::size_t pe = 0;
    std::size_t phases = 0;
    double seconds = 0.0;
    ObjectiveVector kali;  // Kali rule, then sequence optimization
    ObjectiveVector last;  // Last rule, then sequence optimization
    // Smallest DC and smallest SU_var among archived points with dt = complexity.
    Intensity best_dc_dt_optimal = 0;
    Intensity best_su_dt_optimal = 0;
    // Same over the whole archive.
    Intensity best_dc = 0;
    Intensity best_su = 0;
};

PplsInstance run_ppls_instance(const IntensityMatrix& a, std::size_t exact_k_bound);

// 100 * (baseline - best) / baseline; 0 when the baseline is 0.
double improvement_percent(double baseline, double best) noexcept;

struct Summary {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// Improvement columns, "mean of per-instance ratios" and "ratio of means".
struct Improvement {
    double per_instance = 0.0;
    double of_means = 0.0;
};

struct PplsRow {
    Intensity level = 0;
    std::size_t reps = 0;
    Summary pe;
    Summary phases;
    Summary seconds;
    Improvement dc_kali_dt_optimal;
    Improvement su_kali_dt_optimal;
    Improvement su_last_dt_optimal;
    Improvement dc_kali;
    Improvement su_kali;
    Improvement su_last;
    // Instances whose best archived DC is above the Kali baseline's DC.
    std::size_t dc_violations = 0;
};

PplsRow summarize(Intensity level, const std::vector<PplsInstance>& runs);

// Called once per finished instance, in index order, from the calling thread.
using PplsObserver = std::function<void(Intensity level, std::size_t index, const PplsInstance&)>;

std::vector<PplsRow> bench_ppls(const BenchConfig& config, const PplsObserver& observe = {});

void write_rules_csv(std::ostream& out, const std::vector<RulesRow>& rows);
void write_ppls_csv(std::ostream& out, const std::vector<PplsRow>& rows);

// Runs job(i) for i in [0, count) on `threads` workers (0 = hardware
// concurrency). The first exception thrown by a job is rethrown.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job);

}  // namespace mlcseg::cli
