#include "mlcseg/complexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlcseg {

DifferenceMatrix::DifferenceMatrix(const IntensityMatrix& a)
    : rows_(a.rows()), cols_(a.cols() + 1), data_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i) {
        Intensity prev = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            data_[i * cols_ + j] = a(i, j) - prev;
            prev = a(i, j);
        }
        data_[i * cols_ + a.cols()] = -prev;
    }
}

IntensityMatrix DifferenceMatrix::integrate() const {
    const std::size_t n = cols_ - 1;
    std::vector<Intensity> out(rows_ * n);
    for (std::size_t i = 0; i < rows_; ++i) {
        Intensity acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += data_[i * cols_ + j];
            out[i * n + j] = acc;
        }
    }
    return IntensityMatrix(rows_, n, std::move(out));
}

DifferenceMatrix difference_matrix(const IntensityMatrix& a) { return DifferenceMatrix(a); }

Intensity row_complexity(std::span<const Intensity> row) noexcept {
    Intensity c = 0;
    Intensity prev = 0;
    for (Intensity v : row) {
        if (v > prev) c += v - prev;
        prev = v;
    }
    return c;
}

Intensity row_complexity(const IntensityMatrix& a, std::size_t i) {
    if (i >= a.rows()) throw std::out_of_range("row_complexity: row index out of range");
    return row_complexity(a.row(i));
}

Intensity complexity(const IntensityMatrix& a) noexcept {
    Intensity c = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) c = std::max(c, row_complexity(a.row(i)));
    return c;
}

Intensity row_q_value(std::span<const Intensity> row) noexcept {
    Intensity q = 0;
    Intensity prev = 0;
    for (Intensity v : row) {
        if (v != prev) ++q;
        prev = v;
    }
    return q;
}

Intensity q_value(const IntensityMatrix& a) noexcept {
    Intensity q = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) q += row_q_value(a.row(i));
    return q;
}

}  // namespace mlcseg
