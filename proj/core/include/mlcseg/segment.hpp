#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mlcseg/matrix.hpp"

namespace mlcseg {

// Leaf positions of one collimator row. Columns are 0-based here while leaf
// positions follow the 0..n+1 convention: the row exposes the 0-based
// columns left .. right-2, i.e. the half-open range [left, right - 1).
struct RowInterval {
    int left = 0;
    int right = 1;

    bool empty() const noexcept { return right == left + 1; }
    bool covers(std::size_t col) const noexcept {
        const auto c = static_cast<int>(col);
        return left <= c && c + 2 <= right;
    }
    int width() const noexcept { return right - left - 1; }

    // Every empty interval is stored as (0, 1).
    RowInterval canonical() const noexcept { return empty() ? RowInterval{} : *this; }

    friend bool operator==(const RowInterval&, const RowInterval&) = default;
    friend auto operator<=>(const RowInterval&, const RowInterval&) = default;
};

// Binary matrix with the consecutive-ones property, encoded by its leaf pairs.
class Segment {
public:
    Segment() = default;
    // Throws std::invalid_argument if some row has left < 0 or right <= left.
    explicit Segment(std::vector<RowInterval> rows);
    Segment(std::initializer_list<RowInterval> rows);
    Segment(std::span<const int> left, std::span<const int> right);

    // Builds a segment from a 0/1 mask; throws if a row is not consecutive-ones.
    static Segment from_mask(const std::vector<std::vector<int>>& mask);
    static Segment empty_rows(std::size_t rows) { return Segment(std::vector<RowInterval>(rows)); }

    std::size_t rows() const noexcept { return rows_.size(); }
    const RowInterval& row(std::size_t i) const noexcept { return rows_[i]; }
    std::span<const RowInterval> intervals() const noexcept { return rows_; }

    bool covers(std::size_t i, std::size_t j) const noexcept { return rows_[i].covers(j); }
    bool has_support() const noexcept;
    // Every row satisfies right <= cols + 1.
    bool fits(std::size_t cols) const noexcept;

    // Returns a copy with row i replaced (canonicalized).
    Segment with_row(std::size_t i, RowInterval interval) const;

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;

private:
    std::vector<RowInterval> rows_;
};

// Maximal leaf displacement between two configurations. Throws
// std::invalid_argument when the row counts differ.
Intensity mu(const Segment& s, const Segment& t);

}  // namespace mlcseg
