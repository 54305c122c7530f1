#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/matrix.hpp"

namespace mlcseg {

// Counter-based stream: SplitMix64 started from a state derived from
// (seed, stream index). Independent streams for independent matrices.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept;

    std::uint64_t next() noexcept;
    // Uniform integer in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

// The SplitMix64 output finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;
// Deterministic child seed, e.g. one per value of L in a benchmark sweep.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

struct GeneratorSpec {
    std::size_t rows = 15;
    std::size_t cols = 15;
    Intensity max_value = 10;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    // Draw from {0..max_value-1} instead of {0..max_value}.
    bool exclusive_upper = false;
};

// Matrix `index` of the sequence described by `spec`; entries are i.i.d. uniform over
// {0, ..., max_value} in row-major order. Throws std::invalid_argument on a bad spec.
IntensityMatrix random_matrix(const GeneratorSpec& spec, std::size_t index);
std::vector<IntensityMatrix> gen_random(const GeneratorSpec& spec);

struct OracleLimits {
    Intensity max_dt = 8;
    std::size_t max_dc = 4;
    // Refuse when the search-size estimate exceeds this.
    double max_nodes = 1e13;
};

struct FrontPoint {
    ObjectiveVector objectives;
    Decomposition witness;
};

// Crude upper bound on the number of search nodes exact_front would visit.
double oracle_search_estimate(const IntensityMatrix& a, const OracleLimits& limits);

// Exact non-dominated points among all decompositions with at most max_dc
// segments and beam-on time at most max_dt, each with a witness whose order
// minimizes leaf travel. Sorted by objective vector. Throws RefusalError if
// the estimate exceeds limits.max_nodes and std::invalid_argument on bad limits.
std::vector<FrontPoint> exact_front(const IntensityMatrix& a, const OracleLimits& limits);

}  // namespace mlcseg
