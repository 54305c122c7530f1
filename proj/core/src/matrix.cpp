#include "mlcseg/matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "mlcseg/segment.hpp"

namespace mlcseg {

IntensityMatrix::IntensityMatrix(std::size_t rows, std::size_t cols, std::vector<Intensity> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("intensity matrix needs at least one row and one column");
    }
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("intensity matrix: expected " + std::to_string(rows_ * cols_) +
                                    " entries, got " + std::to_string(data_.size()));
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (data_[k] < 0) {
            throw std::invalid_argument("intensity matrix: negative entry at (" +
                                        std::to_string(k / cols_) + ", " + std::to_string(k % cols_) +
                                        ")");
        }
    }
}

IntensityMatrix::IntensityMatrix(std::size_t rows, std::size_t cols)
    : IntensityMatrix(rows, cols, std::vector<Intensity>(rows * cols, 0)) {}

IntensityMatrix IntensityMatrix::from_rows(
    std::initializer_list<std::initializer_list<Intensity>> rows) {
    std::vector<std::vector<Intensity>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

IntensityMatrix IntensityMatrix::from_rows(const std::vector<std::vector<Intensity>>& rows) {
    if (rows.empty()) throw std::invalid_argument("intensity matrix needs at least one row");
    const std::size_t n = rows.front().size();
    std::vector<Intensity> data;
    data.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("intensity matrix rows have different lengths");
        data.insert(data.end(), r.begin(), r.end());
    }
    return IntensityMatrix(rows.size(), n, std::move(data));
}

bool IntensityMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Intensity v) { return v == 0; });
}

Intensity IntensityMatrix::max_entry() const noexcept {
    return *std::max_element(data_.begin(), data_.end());
}

Intensity IntensityMatrix::min_over(const Segment& s) const {
    if (s.rows() != rows_) throw std::invalid_argument("segment and matrix row counts differ");
    Intensity best = std::numeric_limits<Intensity>::max();
    bool any = false;
    for (std::size_t i = 0; i < rows_; ++i) {
        const RowInterval& iv = s.row(i);
        if (iv.empty()) continue;
        const auto lo = static_cast<std::size_t>(iv.left);
        const auto hi = static_cast<std::size_t>(iv.right - 1);
        if (hi > cols_) throw std::invalid_argument("segment exceeds matrix width");
        const Intensity* r = data_.data() + i * cols_;
        best = std::min(best, *std::min_element(r + lo, r + hi));
        any = true;
    }
    return any ? best : 0;
}

void IntensityMatrix::subtract_in_place(Intensity u, const Segment& s) {
    if (s.rows() != rows_) throw std::invalid_argument("segment and matrix row counts differ");
    for (std::size_t i = 0; i < rows_; ++i) {
        const RowInterval& iv = s.row(i);
        if (iv.empty()) continue;
        if (static_cast<std::size_t>(iv.right - 1) > cols_) {
            throw std::invalid_argument("segment exceeds matrix width");
        }
        for (int j = iv.left; j < iv.right - 1; ++j) {
            if (data_[i * cols_ + static_cast<std::size_t>(j)] < u) {
                throw std::domain_error("subtraction makes cell (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") negative");
            }
        }
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        const RowInterval& iv = s.row(i);
        for (int j = iv.left; j < iv.right - 1; ++j) data_[i * cols_ + static_cast<std::size_t>(j)] -= u;
    }
}

}  // namespace mlcseg
