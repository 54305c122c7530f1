#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <limits>
#include <locale>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "mlcseg/complexity.hpp"
#include "mlcseg/decomposition.hpp"
#include "mlcseg/pareto.hpp"

namespace mlcseg::cli {

void check_config(const BenchConfig& config) {
    if (config.rows == 0 || config.cols == 0) throw std::invalid_argument("bench: rows and cols must be positive");
    if (config.l_min < 0) throw std::invalid_argument("bench: --l-min must be nonnegative");
    if (config.l_min > config.l_max) throw std::invalid_argument("bench: --l-min is greater than --l-max");
    if (config.reps == 0) throw std::invalid_argument("bench: --reps must be positive");
    if (config.exact_k_bound > kMaxExactBound) {
        throw std::invalid_argument("bench: --exact-k-bound is above " + std::to_string(kMaxExactBound));
    }
}

IntensityMatrix bench_instance(const BenchConfig& config, Intensity level, std::size_t index) {
    GeneratorSpec spec;
    spec.rows = config.rows;
    spec.cols = config.cols;
    spec.max_value = level;
    spec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(level));
    spec.count = config.reps;
    spec.exclusive_upper = config.exclusive_upper;
    return random_matrix(spec, index);
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                job(i);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<RulesRow> bench_rules(const BenchConfig& config) {
    check_config(config);
    if (config.rules.empty()) throw std::invalid_argument("bench: no rules selected");

    struct Sample {
        Intensity dc = 0;
        Intensity su = 0;
        Intensity su_opt = 0;
    };
    const std::size_t nrules = config.rules.size();

    std::vector<RulesRow> rows;
    for (Intensity level = config.l_min; level <= config.l_max; ++level) {
        std::vector<Sample> samples(config.reps * nrules);
        parallel_for(config.reps, config.threads, [&](std::size_t index) {
            const IntensityMatrix a = bench_instance(config, level, index);
            for (std::size_t k = 0; k < nrules; ++k) {
                const Decomposition d = engel_decompose(a, config.rules[k]);
                const ObjectiveVector y = evaluate(d);
                samples[index * nrules + k] = {y.dc, y.su, setup_time(optimize_sequence(d, config.exact_k_bound))};
            }
        });
        for (std::size_t k = 0; k < nrules; ++k) {
            long long dc = 0, su = 0, su_opt = 0;
            for (std::size_t index = 0; index < config.reps; ++index) {
                const Sample& s = samples[index * nrules + k];
                dc += s.dc;
                su += s.su;
                su_opt += s.su_opt;
            }
            const double n = static_cast<double>(config.reps);
            rows.push_back({level, config.rules[k], config.reps, static_cast<double>(dc) / n,
                            static_cast<double>(su) / n, static_cast<double>(su_opt) / n});
        }
    }
    return rows;
}

PplsInstance run_ppls_instance(const IntensityMatrix& a, std::size_t exact_k_bound) {
    PplsInstance out;
    out.complexity = complexity(a);
    out.kali = evaluate(optimize_sequence(engel_decompose(a, Rule::Kali), exact_k_bound));
    out.last = evaluate(optimize_sequence(engel_decompose(a, Rule::Last), exact_k_bound));

    SolverConfig config;
    config.exact_k_bound = exact_k_bound;
    const SearchResult result = two_phase(a, config);
    out.pe = result.archive.size();
    out.phases = result.stats.phases;
    out.seconds = result.stats.wall_seconds;

    constexpr Intensity kNone = std::numeric_limits<Intensity>::max();
    out.best_dc = out.best_su = out.best_dc_dt_optimal = out.best_su_dt_optimal = kNone;
    for (const ObjectiveVector& y : result.archive.points()) {
        out.best_dc = std::min(out.best_dc, y.dc);
        out.best_su = std::min(out.best_su, y.su);
        if (y.dt == out.complexity) {
            out.best_dc_dt_optimal = std::min(out.best_dc_dt_optimal, y.dc);
            out.best_su_dt_optimal = std::min(out.best_su_dt_optimal, y.su);
        }
    }
    if (out.best_dc_dt_optimal == kNone) {
        // Cannot happen while the Kali start (which has optimal DT) is in the
        // initial population, but keep the columns meaningful if it does.
        throw std::logic_error("bench: archive holds no solution with optimal beam-on time");
    }
    return out;
}

double improvement_percent(double baseline, double best) noexcept {
    if (baseline == 0.0) return 0.0;
    return 100.0 * (baseline - best) / baseline;
}

namespace {

template <class Get>
Summary summary_of(const std::vector<PplsInstance>& runs, Get get) {
    Summary s{0.0, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& r : runs) {
        const double v = get(r);
        s.mean += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean /= static_cast<double>(runs.size());
    return s;
}

template <class Baseline, class Best>
Improvement improvement_of(const std::vector<PplsInstance>& runs, Baseline baseline, Best best) {
    Improvement imp;
    double base_sum = 0.0, best_sum = 0.0;
    for (const auto& r : runs) {
        const double b = static_cast<double>(baseline(r));
        const double v = static_cast<double>(best(r));
        imp.per_instance += improvement_percent(b, v);
        base_sum += b;
        best_sum += v;
    }
    imp.per_instance /= static_cast<double>(runs.size());
    imp.of_means = improvement_percent(base_sum, best_sum);
    return imp;
}

}  // namespace

PplsRow summarize(Intensity level, const std::vector<PplsInstance>& runs) {
    if (runs.empty()) throw std::invalid_argument("summarize: no runs");
    PplsRow row;
    row.level = level;
    row.reps = runs.size();
    row.pe = summary_of(runs, [](const PplsInstance& r) { return static_cast<double>(r.pe); });
    row.phases = summary_of(runs, [](const PplsInstance& r) { return static_cast<double>(r.phases); });
    row.seconds = summary_of(runs, [](const PplsInstance& r) { return r.seconds; });

    auto kali_dc = [](const PplsInstance& r) { return r.kali.dc; };
    auto kali_su = [](const PplsInstance& r) { return r.kali.su; };
    auto last_su = [](const PplsInstance& r) { return r.last.su; };
    auto opt_dc = [](const PplsInstance& r) { return r.best_dc_dt_optimal; };
    auto opt_su = [](const PplsInstance& r) { return r.best_su_dt_optimal; };
    auto any_dc = [](const PplsInstance& r) { return r.best_dc; };
    auto any_su = [](const PplsInstance& r) { return r.best_su; };

    row.dc_kali_dt_optimal = improvement_of(runs, kali_dc, opt_dc);
    row.su_kali_dt_optimal = improvement_of(runs, kali_su, opt_su);
    row.su_last_dt_optimal = improvement_of(runs, last_su, opt_su);
    row.dc_kali = improvement_of(runs, kali_dc, any_dc);
    row.su_kali = improvement_of(runs, kali_su, any_su);
    row.su_last = improvement_of(runs, last_su, any_su);
    row.dc_violations = static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [](const PplsInstance& r) {
        return r.best_dc > r.kali.dc || r.best_dc_dt_optimal > r.kali.dc;
    }));
    return row;
}

std::vector<PplsRow> bench_ppls(const BenchConfig& config, const PplsObserver& observe) {
    check_config(config);
    std::vector<PplsRow> rows;
    for (Intensity level = config.l_min; level <= config.l_max; ++level) {
        std::vector<PplsInstance> runs(config.reps);
        parallel_for(config.reps, config.threads, [&](std::size_t index) {
            runs[index] = run_ppls_instance(bench_instance(config, level, index), config.exact_k_bound);
        });
        if (observe) {
            for (std::size_t index = 0; index < runs.size(); ++index) observe(level, index, runs[index]);
        }
        rows.push_back(summarize(level, runs));
    }
    return rows;
}

namespace {

class CsvLine {
public:
    explicit CsvLine(std::ostream& out) : out_(out) {}
    ~CsvLine() { out_ << '\n'; }

    template <class T>
    CsvLine& operator<<(const T& value) {
        if (!first_) out_ << ',';
        first_ = false;
        out_ << value;
        return *this;
    }

private:
    std::ostream& out_;
    bool first_ = true;
};

// Restores the stream's locale and format flags on exit.
class CsvFormat {
public:
    explicit CsvFormat(std::ostream& out) : out_(out), locale_(out.imbue(std::locale::classic())), flags_(out.flags()),
                                            precision_(out.precision()) {
        out_ << std::fixed << std::setprecision(4);
    }
    ~CsvFormat() {
        out_.imbue(locale_);
        out_.flags(flags_);
        out_.precision(precision_);
    }

private:
    std::ostream& out_;
    std::locale locale_;
    std::ios_base::fmtflags flags_;
    std::streamsize precision_;
};

void put(CsvLine& line, const Summary& s) { line << s.mean << s.min << s.max; }
void put(CsvLine& line, const Improvement& imp) { line << imp.per_instance << imp.of_means; }

}  // namespace

void write_rules_csv(std::ostream& out, const std::vector<RulesRow>& rows) {
    const CsvFormat format(out);
    CsvLine(out) << "mode" << "L" << "rule" << "reps" << "mean_dc" << "mean_su" << "mean_su_opt";
    for (const auto& r : rows) {
        CsvLine(out) << "rules" << r.level << to_string(r.rule) << r.reps << r.mean_dc << r.mean_su << r.mean_su_opt;
    }
}

void write_ppls_csv(std::ostream& out, const std::vector<PplsRow>& rows) {
    const CsvFormat format(out);
    {
        CsvLine header(out);
        header << "mode" << "L" << "reps";
        for (const char* name : {"pe", "phases", "time_s"}) {
            for (const char* stat : {"mean", "min", "max"}) header << std::string(name) + "_" + stat;
        }
        // pct = 100*(baseline-best)/baseline; "inst" averages that over instances,
        // "agg" applies it to the instance means.
        for (const char* regime : {"dtopt", "any"}) {
            for (const char* column : {"dc_vs_kali", "su_vs_kali_seq", "su_vs_last_seq"}) {
                for (const char* how : {"inst", "agg"}) {
                    header << std::string(regime) + "_" + column + "_pct_" + how;
                }
            }
        }
        header << "dc_violations";
    }
    for (const auto& r : rows) {
        CsvLine line(out);
        line << "2ppls" << r.level << r.reps;
        put(line, r.pe);
        put(line, r.phases);
        put(line, r.seconds);
        put(line, r.dc_kali_dt_optimal);
        put(line, r.su_kali_dt_optimal);
        put(line, r.su_last_dt_optimal);
        put(line, r.dc_kali);
        put(line, r.su_kali);
        put(line, r.su_last);
        line << r.dc_violations;
    }
}

}  // namespace mlcseg::cli
