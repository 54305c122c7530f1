#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/matrix.hpp"
#include "mlcseg/segment.hpp"

namespace mlcseg {

// How the greedy constructor picks each row's interval once the step's
// coefficient is fixed.
enum class Rule {
    Min,    // closest to the same row of the previous segment
    First,  // first feasible interval in interval_order
    Last,   // last feasible interval in interval_order
    Kali,   // fewest nonzero increments left in the row; ties go to the later interval
};

std::string_view to_string(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept;

inline constexpr Rule kAllRules[] = {Rule::Min, Rule::First, Rule::Last, Rule::Kali};

// (0,1) followed by every nonempty interval of a row of length n, sorted by
// (left, right). Size 1 + n(n+1)/2.
std::vector<RowInterval> interval_order(int n);

// Row i can be exposed through `interval` with coefficient u without going
// negative and while keeping its complexity within c_target - u.
bool row_feasible(const IntensityMatrix& a, std::size_t i, RowInterval interval, Intensity u,
                  Intensity c_target);

// Largest coefficient that can be removed in one step while keeping the
// minimal beam-on time reachable. Throws std::invalid_argument for a zero matrix.
Intensity u_max(const IntensityMatrix& a);

// One segment whose rows are all feasible at u. `prev` is the previously
// extracted segment (used by Rule::Min; nullptr on the first step).
// Throws std::logic_error if some row has no feasible interval.
Segment select_segment(const IntensityMatrix& a, Intensity u, Rule rule, const Segment* prev);

// Greedy decomposition with optimal beam-on time. Terms are in extraction order.
Decomposition engel_decompose(const IntensityMatrix& a, Rule rule);

}  // namespace mlcseg
