#include "mlcseg/engel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "mlcseg/complexity.hpp"

namespace mlcseg {

namespace {

Intensity pos(Intensity x) noexcept { return x > 0 ? x : 0; }

// Incremental view of one row: subtracting u over an interval only touches
// the increments at its two ends.
class RowView {
public:
    explicit RowView(std::span<const Intensity> row)
        : row_(row), n_(static_cast<int>(row.size())), complexity_(row_complexity(row)) {}

    Intensity complexity() const noexcept { return complexity_; }

    Intensity diff(int j) const noexcept {
        if (j == n_) return -row_[static_cast<std::size_t>(n_ - 1)];
        return row_[static_cast<std::size_t>(j)] - (j > 0 ? row_[static_cast<std::size_t>(j - 1)] : 0);
    }

    Intensity min_covered(RowInterval iv) const noexcept {
        Intensity m = std::numeric_limits<Intensity>::max();
        for (int j = iv.left; j < iv.right - 1; ++j) m = std::min(m, row_[static_cast<std::size_t>(j)]);
        return m;
    }

    Intensity complexity_after(RowInterval iv, Intensity u) const noexcept {
        if (iv.empty()) return complexity_;
        const int a = iv.left;
        const int b = iv.right - 1;
        const Intensity da = diff(a);
        Intensity c = complexity_ - pos(da) + pos(da - u);
        if (b < n_) {
            const Intensity db = diff(b);
            c += pos(db + u) - pos(db);
        }
        return c;
    }

    // Change in the row's count of nonzero increments (columns 0..n-1).
    Intensity q_delta(RowInterval iv, Intensity u) const noexcept {
        if (iv.empty()) return 0;
        const int a = iv.left;
        const int b = iv.right - 1;
        const Intensity da = diff(a);
        Intensity q = -(da != 0) + (da - u != 0);
        if (b < n_) {
            const Intensity db = diff(b);
            q += -(db != 0) + (db + u != 0);
        }
        return q;
    }

    bool feasible(RowInterval iv, Intensity u, Intensity c_target) const noexcept {
        if (!iv.empty() && min_covered(iv) < u) return false;
        return complexity_after(iv, u) <= c_target - u;
    }

    // Largest u <= cap for which `iv` is feasible; 0 if none. complexity_after(iv, u) + u
    // is nondecreasing in u, so the feasible coefficients form a prefix.
    Intensity max_feasible(RowInterval iv, Intensity cap, Intensity c_target) const noexcept {
        if (iv.empty()) return std::max<Intensity>(0, std::min(cap, c_target - complexity_));
        Intensity lo = 0;
        Intensity hi = std::min(cap, min_covered(iv));
        while (lo < hi) {
            const Intensity mid = lo + (hi - lo + 1) / 2;
            if (complexity_after(iv, mid) + mid <= c_target) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        return lo;
    }

private:
    std::span<const Intensity> row_;
    int n_;
    Intensity complexity_;
};

Intensity u_max_impl(const IntensityMatrix& a, Intensity c) {
    const int n = static_cast<int>(a.cols());
    Intensity best_overall = c;
    for (std::size_t i = 0; i < a.rows() && best_overall > 0; ++i) {
        const RowView row(a.row(i));
        Intensity best = row.max_feasible(RowInterval{}, best_overall, c);
        for (int l = 0; l < n && best < best_overall; ++l) {
            for (int r = l + 2; r <= n + 1; ++r) {
                const RowInterval iv{l, r};
                // A zero entry blocks every wider interval starting at l.
                if (a(i, static_cast<std::size_t>(r - 2)) == 0) break;
                best = std::max(best, row.max_feasible(iv, best_overall, c));
                if (best >= best_overall) break;
            }
        }
        best_overall = std::min(best_overall, best);
    }
    return best_overall;
}

// Largest right leaf r such that every entry of [l, r-1) is at least u;
// l + 1 (the empty interval) when row[l] < u.
int widest_right(std::span<const Intensity> row, int l, Intensity u) {
    int r = l + 1;
    while (r - 1 < static_cast<int>(row.size()) && row[static_cast<std::size_t>(r - 1)] >= u) ++r;
    return r;
}

RowInterval select_row(std::span<const Intensity> values, Intensity u, Intensity c, Rule rule, const RowInterval* ref) {
    const RowView row(values);
    const int n = static_cast<int>(values.size());
    const bool empty_ok = row.feasible(RowInterval{}, u, c);

    if (rule == Rule::Last) {
        for (int l = n - 1; l >= 0; --l) {
            for (int r = widest_right(values, l, u); r >= l + 2; --r) {
                if (row.complexity_after({l, r}, u) <= c - u) return {l, r};
            }
        }
        if (empty_ok) return {};
        throw std::logic_error("select_segment: no feasible interval at u=" + std::to_string(u));
    }

    std::optional<RowInterval> pick;
    Intensity best = std::numeric_limits<Intensity>::max();
    auto consider = [&](RowInterval iv) {
        Intensity score = 0;
        switch (rule) {
            case Rule::Min:
                if (ref != nullptr) score = std::max(std::abs(iv.left - ref->left), std::abs(iv.right - ref->right));
                break;
            case Rule::Kali: score = row.q_delta(iv, u); break;
            default: break;
        }
        // Kali keeps the latest minimizer, Min the first.
        if (!pick || score < best || (rule == Rule::Kali && score == best)) {
            best = score;
            pick = iv;
        }
    };
    const bool take_first = rule == Rule::First || (rule == Rule::Min && ref == nullptr);

    if (empty_ok) {
        if (take_first) return {};
        consider(RowInterval{});
    }
    for (int l = 0; l < n; ++l) {
        const int widest = widest_right(values, l, u);
        for (int r = l + 2; r <= widest; ++r) {
            if (row.complexity_after({l, r}, u) > c - u) continue;
            if (take_first) return {l, r};
            consider({l, r});
        }
    }
    if (!pick) throw std::logic_error("select_segment: no feasible interval at u=" + std::to_string(u));
    return *pick;
}

Segment select_impl(const IntensityMatrix& a, Intensity u, Intensity c, Rule rule, const Segment* prev) {
    std::vector<RowInterval> chosen(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        try {
            chosen[i] = select_row(a.row(i), u, c, rule, prev != nullptr ? &prev->row(i) : nullptr);
        } catch (const std::logic_error& e) {
            throw std::logic_error("row " + std::to_string(i) + ": " + e.what());
        }
    }
    return Segment(std::move(chosen));
}

}  // namespace

std::string_view to_string(Rule rule) noexcept {
    switch (rule) {
        case Rule::Min: return "min";
        case Rule::First: return "first";
        case Rule::Last: return "last";
        case Rule::Kali: return "kali";
    }
    return "?";
}

std::optional<Rule> parse_rule(std::string_view name) noexcept {
    for (Rule r : kAllRules) {
        if (to_string(r) == name) return r;
    }
    return std::nullopt;
}

std::vector<RowInterval> interval_order(int n) {
    if (n < 1) throw std::invalid_argument("interval_order: row length must be positive");
    std::vector<RowInterval> order;
    order.reserve(1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2);
    order.push_back({0, 1});
    for (int l = 0; l <= n - 1; ++l) {
        for (int r = l + 2; r <= n + 1; ++r) order.push_back({l, r});
    }
    return order;
}

bool row_feasible(const IntensityMatrix& a, std::size_t i, RowInterval interval, Intensity u,
                  Intensity c_target) {
    if (i >= a.rows()) throw std::out_of_range("row_feasible: row index out of range");
    if (static_cast<std::size_t>(interval.right) > a.cols() + 1) return false;
    return RowView(a.row(i)).feasible(interval.canonical(), u, c_target);
}

Intensity u_max(const IntensityMatrix& a) {
    const Intensity c = complexity(a);
    if (c == 0) throw std::invalid_argument("u_max: matrix is all zeros");
    const Intensity u = u_max_impl(a, c);
    if (u < 1) throw std::logic_error("u_max: no complexity-preserving coefficient found");
    return u;
}

Segment select_segment(const IntensityMatrix& a, Intensity u, Rule rule, const Segment* prev) {
    if (prev != nullptr && prev->rows() != a.rows()) {
        throw std::invalid_argument("select_segment: previous segment has a different row count");
    }
    return select_impl(a, u, complexity(a), rule, prev);
}

Decomposition engel_decompose(const IntensityMatrix& a, Rule rule) {
    Decomposition out;
    IntensityMatrix residual = a;
    Intensity c = complexity(residual);
    while (c > 0) {
        const Intensity u = u_max_impl(residual, c);
        if (u < 1) throw std::logic_error("engel_decompose: no complexity-preserving coefficient found");
        const Segment* prev = out.empty() ? nullptr : &out.terms.back().segment;
        Segment s = select_impl(residual, u, c, rule, prev);
        residual.subtract_in_place(u, s);
        out.terms.push_back({u, std::move(s)});
        c -= u;
    }
    return out;
}

}  // namespace mlcseg
