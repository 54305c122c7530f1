#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/segment.hpp"

namespace mlcseg {

inline constexpr std::size_t kDefaultExactBound = 14;
// Beyond this the subset DP table no longer fits comfortably in memory.
inline constexpr std::size_t kMaxExactBound = 20;

// Pairwise mu between segments.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t size, std::vector<Intensity> entries);

    std::size_t size() const noexcept { return size_; }
    Intensity operator()(std::size_t a, std::size_t b) const noexcept { return data_[a * size_ + b]; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t size_;
    std::vector<Intensity> data_;
};

DistanceMatrix distance_matrix(std::span<const Segment> segments);
DistanceMatrix distance_matrix(const Decomposition& d);

// A permutation of 0..K-1.
using SegmentOrder = std::vector<std::size_t>;

SegmentOrder identity_order(std::size_t k);
bool is_permutation_of_size(const SegmentOrder& order, std::size_t k);

// Sum of consecutive distances along the path; no closing edge.
Intensity path_cost(const SegmentOrder& order, const DistanceMatrix& dist);

// First-improvement 2-edge exchange on the cycle formed by the path plus a
// dummy vertex at distance zero from every segment. Moves are scanned in
// lexicographic order and the scan restarts after each accepted move.
SegmentOrder two_opt_path(SegmentOrder order, const DistanceMatrix& dist);

// Minimum-cost Hamiltonian path with free endpoints (DP over subsets).
// Throws std::invalid_argument if dist.size() > max_size or > kMaxExactBound.
SegmentOrder exact_path(const DistanceMatrix& dist, std::size_t max_size = kDefaultExactBound);

Decomposition reorder(const Decomposition& d, const SegmentOrder& order);

// Reorders the terms to reduce leaf travel: exact for K <= exact_bound,
// otherwise 2-opt seeded with the current order. Never increases SU_var.
Decomposition optimize_sequence(const Decomposition& d, std::size_t exact_bound = kDefaultExactBound);

}  // namespace mlcseg
