#include "mlcseg/instances.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mlcseg/complexity.hpp"
#include "mlcseg/error.hpp"
#include "mlcseg/pareto.hpp"
#include "mlcseg/sequencing.hpp"

namespace mlcseg {

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
    return mix64(seed ^ mix64(tag + 0x632BE59BD9B4E019ULL));
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix64(seed) ^ mix64((index + 1) * 0x9E3779B97F4A7C15ULL));
}

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    // Reject the low 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

IntensityMatrix random_matrix(const GeneratorSpec& spec, std::size_t index) {
    if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("generator: dimensions must be positive");
    if (spec.max_value < 0 || (spec.exclusive_upper && spec.max_value < 1)) {
        throw std::invalid_argument("generator: invalid max value");
    }
    const auto bound = static_cast<std::uint64_t>(spec.max_value) + (spec.exclusive_upper ? 0 : 1);
    SplitMix64 rng = SplitMix64::stream(spec.seed, index);
    std::vector<Intensity> data(spec.rows * spec.cols);
    for (Intensity& v : data) v = static_cast<Intensity>(rng.below(bound));
    return IntensityMatrix(spec.rows, spec.cols, std::move(data));
}

std::vector<IntensityMatrix> gen_random(const GeneratorSpec& spec) {
    if (spec.count == 0) throw std::invalid_argument("generator: count must be positive");
    std::vector<IntensityMatrix> out;
    out.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) out.push_back(random_matrix(spec, k));
    return out;
}

namespace {

// Nonempty intervals of row i whose exposed cells are all positive; when
// `start` is given only intervals beginning at that column.
std::vector<RowInterval> positive_intervals(const IntensityMatrix& r, std::size_t i, int start = -1) {
    std::vector<RowInterval> out;
    const int n = static_cast<int>(r.cols());
    const int lo = start < 0 ? 0 : start;
    const int hi = start < 0 ? n - 1 : start;
    for (int l = lo; l <= hi; ++l) {
        for (int rr = l + 2; rr <= n + 1; ++rr) {
            if (r(i, static_cast<std::size_t>(rr - 2)) == 0) break;
            out.push_back({l, rr});
        }
    }
    return out;
}

class FrontSearch {
public:
    FrontSearch(const IntensityMatrix& a, const OracleLimits& limits) : limits_(limits), residual_(a) {}

    ParetoArchive run() {
        descend(0);
        return std::move(front_);
    }

private:
    void record() {
        Decomposition d{terms_};
        if (d.size() >= 3) d = reorder(d, exact_path(distance_matrix(d), kMaxExactBound));
        front_.add(std::move(d));
    }

    void descend(Intensity dt_used) {
        if (residual_.is_zero()) {
            record();
            return;
        }
        if (terms_.size() >= limits_.max_dc) return;
        if (dt_used + complexity(residual_) > limits_.max_dt) return;

        // Some remaining term covers the first nonzero cell (row-major); rows
        // above it are zero and so are the cells to its left.
        const auto cells = residual_.entries();
        const auto first = static_cast<std::size_t>(
            std::find_if(cells.begin(), cells.end(), [](Intensity v) { return v != 0; }) - cells.begin());
        const std::size_t i0 = first / residual_.cols();
        const int j0 = static_cast<int>(first % residual_.cols());

        std::vector<std::vector<RowInterval>> options(residual_.rows());
        for (std::size_t i = 0; i < residual_.rows(); ++i) {
            if (i < i0) {
                options[i] = {RowInterval{}};
            } else if (i == i0) {
                options[i] = positive_intervals(residual_, i, j0);
            } else {
                options[i] = positive_intervals(residual_, i);
                options[i].insert(options[i].begin(), RowInterval{});
            }
        }
        std::vector<RowInterval> rows(residual_.rows());
        choose_rows(0, options, rows, dt_used);
    }

    void choose_rows(std::size_t i, const std::vector<std::vector<RowInterval>>& options,
                     std::vector<RowInterval>& rows, Intensity dt_used) {
        if (i == rows.size()) {
            const Segment s(rows);
            const Intensity top = std::min(residual_.min_over(s), limits_.max_dt - dt_used);
            const IntensityMatrix before = residual_;
            for (Intensity u = 1; u <= top; ++u) {
                residual_.subtract_in_place(u, s);
                terms_.push_back({u, s});
                descend(dt_used + u);
                terms_.pop_back();
                residual_ = before;
            }
            return;
        }
        for (const RowInterval& iv : options[i]) {
            rows[i] = iv;
            choose_rows(i + 1, options, rows, dt_used);
        }
    }

    OracleLimits limits_;
    IntensityMatrix residual_;
    std::vector<Term> terms_;
    ParetoArchive front_;
};

}  // namespace

double oracle_search_estimate(const IntensityMatrix& a, const OracleLimits& limits) {
    // Branching factor: segments that can cover the first nonzero cell.
    double branching = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double below = 1;
        for (std::size_t k = i + 1; k < a.rows(); ++k) below *= 1.0 + static_cast<double>(positive_intervals(a, k).size());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto here = static_cast<double>(positive_intervals(a, i, static_cast<int>(j)).size());
            branching = std::max(branching, here * below);
        }
    }
    const double coeffs = static_cast<double>(std::max<Intensity>(1, std::min(a.max_entry(), limits.max_dt)));
    const double per_level = branching * coeffs;
    double total = 1;
    double level = 1;
    for (std::size_t k = 0; k < limits.max_dc; ++k) {
        level *= per_level;
        total += level;
    }
    return total;
}

std::vector<FrontPoint> exact_front(const IntensityMatrix& a, const OracleLimits& limits) {
    if (limits.max_dc < 1 || limits.max_dt < static_cast<Intensity>(limits.max_dc)) {
        throw std::invalid_argument("oracle limits need max_dt >= max_dc >= 1");
    }
    if (limits.max_dc > kMaxExactBound) throw std::invalid_argument("oracle: max_dc too large");
    const double estimate = oracle_search_estimate(a, limits);
    if (estimate > limits.max_nodes) {
        std::ostringstream msg;
        msg << "instance too large for exhaustive search: estimated " << estimate << " nodes (limit "
            << limits.max_nodes << ")";
        throw RefusalError(estimate, msg.str());
    }
    const ParetoArchive front = FrontSearch(a, limits).run();
    std::vector<FrontPoint> out;
    for (auto& e : front.sorted_entries()) out.push_back({e.objectives, std::move(e.solution)});
    return out;
}

}  // namespace mlcseg
