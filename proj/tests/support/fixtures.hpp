#pragma once

// Hand-checked matrices and decompositions used across the test suites.

#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/matrix.hpp"
#include "mlcseg/segment.hpp"

namespace fixtures {

using mlcseg::Decomposition;
using mlcseg::IntensityMatrix;
using mlcseg::Segment;
using mlcseg::Term;

inline Term term(mlcseg::Intensity u, const std::vector<std::vector<int>>& mask) {
    return {u, Segment::from_mask(mask)};
}

// 2x3 matrix whose three objectives conflict.
inline IntensityMatrix conflict_matrix() { return IntensityMatrix::from_rows({{3, 2, 3}, {2, 5, 1}}); }

// Optimal beam-on time: (5, 4, 4).
inline Decomposition conflict_d1() {
    return {{term(1, {{1, 1, 1}, {0, 1, 1}}), term(1, {{1, 1, 0}, {1, 1, 0}}), term(1, {{1, 0, 0}, {1, 1, 0}}),
             term(2, {{0, 0, 1}, {0, 1, 0}})}};
}

// Optimal segment count: (6, 3, 4).
inline Decomposition conflict_d2() {
    return {{term(2, {{0, 1, 1}, {1, 1, 0}}), term(3, {{1, 0, 0}, {0, 1, 0}}), term(1, {{0, 0, 1}, {0, 0, 1}})}};
}

// Optimal leaf travel: (8, 4, 3).
inline Decomposition conflict_d3() {
    return {{term(3, {{1, 0, 0}, {0, 1, 0}}), term(2, {{0, 1, 0}, {1, 0, 0}}), term(2, {{0, 0, 1}, {0, 1, 0}}),
             term(1, {{0, 0, 1}, {0, 0, 1}})}};
}

inline IntensityMatrix example_3x3() { return IntensityMatrix::from_rows({{4, 8, 3}, {5, 2, 1}, {5, 7, 2}}); }

inline Decomposition example_3x3_decomposition() {
    return {{term(4, {{1, 1, 0}, {1, 0, 0}, {1, 1, 0}}), term(2, {{0, 1, 1}, {0, 1, 0}, {0, 1, 1}}),
             term(1, {{0, 1, 1}, {1, 0, 0}, {1, 1, 0}}), term(1, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})}};
}

// Matrix of the neighborhood walkthrough.
inline IntensityMatrix walkthrough_matrix() { return IntensityMatrix::from_rows({{8, 5, 6}, {5, 3, 6}}); }

// DT-optimal starting point of the walkthrough: (9, 4, 6).
inline Decomposition walkthrough_start() {
    return {{term(3, {{1, 0, 0}, {0, 0, 1}}), term(1, {{0, 0, 1}, {0, 1, 1}}), term(3, {{1, 1, 1}, {1, 0, 0}}),
             term(2, {{1, 1, 1}, {1, 1, 1}})}};
}

// First neighbor before sequencing: (14, 4, 8).
inline Decomposition walkthrough_first_unsequenced() {
    return {{term(3, {{1, 0, 0}, {0, 1, 0}}), term(5, {{1, 1, 1}, {1, 0, 0}}), term(5, {{0, 0, 0}, {0, 0, 1}}),
             term(1, {{0, 0, 1}, {0, 0, 1}})}};
}

// First neighbor after sequencing: (14, 4, 5).
inline Decomposition walkthrough_first_neighbor() {
    return {{term(5, {{0, 0, 0}, {0, 0, 1}}), term(3, {{1, 0, 0}, {0, 1, 0}}), term(5, {{1, 1, 1}, {1, 0, 0}}),
             term(1, {{0, 0, 1}, {0, 0, 1}})}};
}

// Second neighbor: (14, 3, 3).
inline Decomposition walkthrough_second_neighbor() {
    return {{term(5, {{1, 1, 0}, {1, 0, 0}}), term(3, {{1, 0, 0}, {0, 1, 0}}), term(6, {{0, 0, 1}, {0, 0, 1}})}};
}

// The (10, 4, 4) solution quoted for the same matrix.
inline Decomposition walkthrough_ten_four_four() {
    return {{term(2, {{0, 0, 1}, {1, 1, 1}}), term(3, {{1, 0, 0}, {1, 0, 0}}), term(1, {{1, 1, 0}, {0, 1, 0}}),
             term(4, {{1, 1, 1}, {0, 0, 1}})}};
}

}  // namespace fixtures
