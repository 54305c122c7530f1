#include "mlcseg/sequencing.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mlcseg {

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<Intensity> entries)
    : size_(size), data_(std::move(entries)) {
    if (data_.size() != size_ * size_) throw std::invalid_argument("distance matrix: wrong entry count");
}

DistanceMatrix distance_matrix(std::span<const Segment> segments) {
    const std::size_t k = segments.size();
    std::vector<Intensity> d(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            d[a * k + b] = d[b * k + a] = mu(segments[a], segments[b]);
        }
    }
    return DistanceMatrix(k, std::move(d));
}

DistanceMatrix distance_matrix(const Decomposition& d) {
    std::vector<Segment> segs;
    segs.reserve(d.size());
    for (const Term& t : d.terms) segs.push_back(t.segment);
    return distance_matrix(segs);
}

SegmentOrder identity_order(std::size_t k) {
    SegmentOrder order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

bool is_permutation_of_size(const SegmentOrder& order, std::size_t k) {
    if (order.size() != k) return false;
    std::vector<char> seen(k, 0);
    for (std::size_t v : order) {
        if (v >= k || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Intensity path_cost(const SegmentOrder& order, const DistanceMatrix& dist) {
    Intensity cost = 0;
    for (std::size_t p = 1; p < order.size(); ++p) cost += dist(order[p - 1], order[p]);
    return cost;
}

SegmentOrder two_opt_path(SegmentOrder order, const DistanceMatrix& dist) {
    if (!is_permutation_of_size(order, dist.size())) {
        throw std::invalid_argument("two_opt_path: order is not a permutation of the segments");
    }
    const std::size_t k = order.size();
    if (k < 3) return order;

    // Tour position 0 holds the dummy vertex; reversals never move it.
    constexpr std::size_t dummy = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> tour;
    tour.reserve(k + 1);
    tour.push_back(dummy);
    tour.insert(tour.end(), order.begin(), order.end());
    const std::size_t len = tour.size();
    auto w = [&](std::size_t a, std::size_t b) -> Intensity {
        return (a == dummy || b == dummy) ? 0 : dist(a, b);
    };

    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 2 < len && !improved; ++i) {
            for (std::size_t j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue;  // the two edges share the dummy
                const std::size_t a = tour[i], b = tour[i + 1];
                const std::size_t c = tour[j], e = tour[(j + 1) % len];
                const Intensity gain = w(a, b) + w(c, e) - w(a, c) - w(b, e);
                if (gain > 0) {
                    std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 tour.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    improved = true;
                    break;
                }
            }
        }
    }
    return SegmentOrder(tour.begin() + 1, tour.end());
}

SegmentOrder exact_path(const DistanceMatrix& dist, std::size_t max_size) {
    const std::size_t k = dist.size();
    if (k > max_size || k > kMaxExactBound) {
        throw std::invalid_argument("exact_path: " + std::to_string(k) +
                                    " segments exceed the exact bound " +
                                    std::to_string(std::min(max_size, kMaxExactBound)));
    }
    if (k <= 1) return identity_order(k);

    const std::size_t full = (std::size_t{1} << k) - 1;
    constexpr std::int32_t inf = std::numeric_limits<std::int32_t>::max();
    // cost[mask * k + v]: cheapest path visiting `mask` and ending at v.
    std::vector<std::int32_t> cost((full + 1) * k, inf);
    std::vector<std::uint8_t> parent((full + 1) * k, 0);
    for (std::size_t v = 0; v < k; ++v) cost[(std::size_t{1} << v) * k + v] = 0;

    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (std::size_t v = 0; v < k; ++v) {
            const std::int32_t cv = cost[mask * k + v];
            if (cv == inf) continue;
            for (std::size_t w = 0; w < k; ++w) {
                if (mask & (std::size_t{1} << w)) continue;
                const std::size_t next = mask | (std::size_t{1} << w);
                const auto cand = cv + static_cast<std::int32_t>(dist(v, w));
                if (cand < cost[next * k + w]) {
                    cost[next * k + w] = cand;
                    parent[next * k + w] = static_cast<std::uint8_t>(v);
                }
            }
        }
    }

    std::size_t end = 0;
    for (std::size_t v = 1; v < k; ++v) {
        if (cost[full * k + v] < cost[full * k + end]) end = v;
    }
    SegmentOrder order;
    order.reserve(k);
    std::size_t mask = full;
    std::size_t v = end;
    while (true) {
        order.push_back(v);
        const std::size_t rest = mask & ~(std::size_t{1} << v);
        if (rest == 0) break;
        const std::size_t p = parent[mask * k + v];
        mask = rest;
        v = p;
    }
    std::reverse(order.begin(), order.end());
    return order;
}

Decomposition reorder(const Decomposition& d, const SegmentOrder& order) {
    if (!is_permutation_of_size(order, d.size())) {
        throw std::invalid_argument("reorder: order is not a permutation of the terms");
    }
    Decomposition out;
    out.terms.reserve(d.size());
    for (std::size_t idx : order) out.terms.push_back(d.terms[idx]);
    return out;
}

Decomposition optimize_sequence(const Decomposition& d, std::size_t exact_bound) {
    if (d.size() < 3) return d;
    const DistanceMatrix dist = distance_matrix(d);
    const SegmentOrder current = identity_order(d.size());
    const SegmentOrder better = d.size() <= std::min(exact_bound, kMaxExactBound)
                                    ? exact_path(dist, exact_bound)
                                    : two_opt_path(current, dist);
    if (path_cost(better, dist) < path_cost(current, dist)) return reorder(d, better);
    return d;
}

}  // namespace mlcseg
