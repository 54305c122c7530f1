#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <vector>

#include "mlcseg/matrix.hpp"
#include "mlcseg/segment.hpp"

namespace mlcseg {

struct Term {
    Intensity coefficient = 1;
    Segment segment;

    friend bool operator==(const Term&, const Term&) = default;
};

// Ordered weighted sum of segments. The order matters: it fixes the leaf
// travel between consecutive segments.
struct Decomposition {
    std::vector<Term> terms;

    std::size_t size() const noexcept { return terms.size(); }
    bool empty() const noexcept { return terms.empty(); }
    auto begin() const noexcept { return terms.begin(); }
    auto end() const noexcept { return terms.end(); }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// (DT, DC, SU_var): total beam-on time, number of segments, leaf travel.
// Ordered lexicographically for deterministic output.
struct ObjectiveVector {
    Intensity dt = 0;
    Intensity dc = 0;
    Intensity su = 0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const ObjectiveVector& y);

ObjectiveVector evaluate(const Decomposition& d);

// Sum of mu over consecutive segments.
Intensity setup_time(const Decomposition& d);

// True iff every coefficient is >= 1, every segment fits A and the weighted
// sum reproduces A. Throws std::invalid_argument on a row-count mismatch.
bool validate(const IntensityMatrix& a, const Decomposition& d);

// Weighted sum of the segments as a matrix of the given shape.
IntensityMatrix reconstruct(const Decomposition& d, std::size_t rows, std::size_t cols);

// A - u*S. Requires u >= 1 (std::invalid_argument) and a nonnegative result
// (std::domain_error naming the cell).
IntensityMatrix subtract(const IntensityMatrix& a, Intensity u, const Segment& s);

}  // namespace mlcseg
