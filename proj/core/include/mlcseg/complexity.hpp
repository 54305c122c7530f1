#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mlcseg/matrix.hpp"

namespace mlcseg {

// d(i, j) = a(i, j) - a(i, j-1) with zero padding on both sides; m x (n+1).
// Column index j here is 0-based, so d(i, 0) = a(i, 0) and d(i, n) = -a(i, n-1).
class DifferenceMatrix {
public:
    explicit DifferenceMatrix(const IntensityMatrix& a);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Intensity operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    std::span<const Intensity> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }

    // Row-wise prefix sums, dropping the padding column.
    IntensityMatrix integrate() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Intensity> data_;
};

DifferenceMatrix difference_matrix(const IntensityMatrix& a);

// Sum of positive increments along one row (with a leading zero).
Intensity row_complexity(std::span<const Intensity> row) noexcept;
// Throws std::out_of_range for a bad row index.
Intensity row_complexity(const IntensityMatrix& a, std::size_t i);

// Max row complexity; equals the minimal beam-on time of any decomposition.
Intensity complexity(const IntensityMatrix& a) noexcept;

// Number of nonzero increments over the n real columns of one row.
Intensity row_q_value(std::span<const Intensity> row) noexcept;
Intensity q_value(const IntensityMatrix& a) noexcept;

}  // namespace mlcseg
