#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/matrix.hpp"
#include "mlcseg/segment.hpp"
#include "mlcseg/sequencing.hpp"

namespace mlcseg {

// Shift of one row's leaves by -1/0/+1 each. The neighborhood also tries the
// unmodified segment, which is not represented by a LinePerturbation.
struct LinePerturbation {
    std::size_t row = 0;
    int dl = 0;
    int dr = 0;
};

// The eight (dl, dr) moves per row, in the order they are tried.
inline constexpr std::pair<int, int> kLineMoves[8] = {
    {+1, +1}, {+1, 0}, {+1, -1}, {0, +1}, {0, -1}, {-1, +1}, {-1, 0}, {-1, -1},
};

// Applies p to s. Returns nullopt if the shifted leaves leave 0 <= l < r <= cols+1.
// A shift that closes the row yields the canonical empty row.
std::optional<Segment> perturb(const Segment& s, LinePerturbation p, std::size_t cols);

inline constexpr std::size_t kNeighborExactBound = 8;

struct NeighborhoodOptions {
    // Upper bound on the coefficients tried for the lead segment; 0 = all feasible.
    Intensity max_coefficient = 0;
    // Neighbors with at most this many terms are sequenced exactly, larger ones by 2-opt.
    std::size_t exact_sequence_bound = kNeighborExactBound;
};

// Two terms can be replaced by one when they share the segment (coefficients
// add) or share the coefficient and no row is open in both (rows are overlaid).
bool can_combine(const Term& x, const Term& y) noexcept;
Term combine(const Term& x, const Term& y);

// Appends t, first folding it into compatible terms already present. The
// latest compatible term is tried first; folding repeats until nothing is
// compatible and the result takes the earliest position involved.
void add_term(std::vector<Term>& terms, Term t);

// Re-adds every term of d through add_term, in order.
Decomposition merge_terms(const Decomposition& d);

// Builds one neighbor: `lead` first, then the terms of `rest` in order, each
// with min(its coefficient, largest feasible coefficient) or skipped, then the
// residual via the greedy constructor (Last rule), then the order is improved:
// exactly when there are at most exact_bound terms, by 2-opt otherwise.
// Returns nullopt if the lead does not fit under A.
std::optional<Decomposition> rebuild(const IntensityMatrix& a, const Term& lead, std::span<const Term> rest,
                                     std::size_t exact_bound = kNeighborExactBound);

using NeighborVisitor = std::function<void(Decomposition&&)>;

// Visits every neighbor of d: for each term, the segment unmodified or with one
// row shifted, placed first with every feasible coefficient. Returns the number visited.
std::size_t for_each_neighbor(const IntensityMatrix& a, const Decomposition& d,
                              const NeighborVisitor& visit, const NeighborhoodOptions& options = {});

std::vector<Decomposition> enumerate_neighbors(const IntensityMatrix& a, const Decomposition& d,
                                               const NeighborhoodOptions& options = {});

// K * L * (8m + 1), with L the largest entry of A.
std::size_t neighbor_bound(const IntensityMatrix& a, const Decomposition& d) noexcept;

}  // namespace mlcseg
