#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mlcseg {

// Intensities, coefficients and objective values share one 64-bit type.
using Intensity = std::int64_t;

class Segment;

// Nonnegative integer matrix to be decomposed. Row-major storage.
class IntensityMatrix {
public:
    // Throws std::invalid_argument on zero dimensions or negative entries.
    IntensityMatrix(std::size_t rows, std::size_t cols, std::vector<Intensity> entries);
    IntensityMatrix(std::size_t rows, std::size_t cols);

    static IntensityMatrix from_rows(std::initializer_list<std::initializer_list<Intensity>> rows);
    static IntensityMatrix from_rows(const std::vector<std::vector<Intensity>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Intensity operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    std::span<const Intensity> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<const Intensity> entries() const noexcept { return data_; }

    bool is_zero() const noexcept;
    Intensity max_entry() const noexcept;

    // Smallest entry over the support of `s`; 0 if the support is empty.
    Intensity min_over(const Segment& s) const;

    // this -= u * s. Throws std::domain_error naming the first offending cell
    // if an entry would become negative; the matrix is left untouched then.
    void subtract_in_place(Intensity u, const Segment& s);

    friend bool operator==(const IntensityMatrix&, const IntensityMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Intensity> data_;
};

}  // namespace mlcseg
