#include "mlcseg/segment.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mlcseg {

namespace {

RowInterval checked(RowInterval iv, std::size_t row) {
    if (iv.left < 0 || iv.right <= iv.left) {
        throw std::invalid_argument("segment row " + std::to_string(row) + ": invalid leaf pair (" +
                                    std::to_string(iv.left) + ", " + std::to_string(iv.right) + ")");
    }
    return iv.canonical();
}

}  // namespace

Segment::Segment(std::vector<RowInterval> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] = checked(rows_[i], i);
}

Segment::Segment(std::initializer_list<RowInterval> rows) : Segment(std::vector<RowInterval>(rows)) {}

Segment::Segment(std::span<const int> left, std::span<const int> right) {
    if (left.size() != right.size()) throw std::invalid_argument("segment: left/right length mismatch");
    rows_.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) rows_.push_back(checked({left[i], right[i]}, i));
}

Segment Segment::from_mask(const std::vector<std::vector<int>>& mask) {
    std::vector<RowInterval> rows;
    rows.reserve(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const auto& r = mask[i];
        const auto first = std::find(r.begin(), r.end(), 1);
        if (first == r.end()) {
            rows.emplace_back();
            continue;
        }
        const auto past = std::find(first, r.end(), 0);
        if (std::find(past, r.end(), 1) != r.end()) {
            throw std::invalid_argument("mask row " + std::to_string(i) + " is not consecutive-ones");
        }
        const int lo = static_cast<int>(first - r.begin());
        const int hi = static_cast<int>(past - r.begin());
        rows.push_back({lo, hi + 1});
    }
    return Segment(std::move(rows));
}

bool Segment::has_support() const noexcept {
    return std::any_of(rows_.begin(), rows_.end(), [](const RowInterval& iv) { return !iv.empty(); });
}

bool Segment::fits(std::size_t cols) const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [cols](const RowInterval& iv) {
        return static_cast<std::size_t>(iv.right) <= cols + 1;
    });
}

Segment Segment::with_row(std::size_t i, RowInterval interval) const {
    Segment out = *this;
    out.rows_.at(i) = checked(interval, i);
    return out;
}

Intensity mu(const Segment& s, const Segment& t) {
    if (s.rows() != t.rows()) throw std::invalid_argument("mu: segments have different row counts");
    int best = 0;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        const RowInterval& a = s.row(i);
        const RowInterval& b = t.row(i);
        best = std::max({best, std::abs(a.left - b.left), std::abs(a.right - b.right)});
    }
    return best;
}

}  // namespace mlcseg
