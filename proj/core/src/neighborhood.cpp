#include "mlcseg/neighborhood.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlcseg/engel.hpp"
#include "mlcseg/sequencing.hpp"

namespace mlcseg {

namespace {

// At most one of the two rows is open.
bool rows_disjoint(const RowInterval& x, const RowInterval& y) noexcept { return x.empty() || y.empty(); }

}  // namespace

std::optional<Segment> perturb(const Segment& s, LinePerturbation p, std::size_t cols) {
    if (p.row >= s.rows()) throw std::out_of_range("perturb: row index out of range");
    const RowInterval& iv = s.row(p.row);
    const int l = iv.left + p.dl;
    const int r = iv.right + p.dr;
    if (l < 0 || r <= l || r > static_cast<int>(cols) + 1) return std::nullopt;
    return s.with_row(p.row, {l, r});
}

bool can_combine(const Term& x, const Term& y) noexcept {
    if (x.segment.rows() != y.segment.rows()) return false;
    if (x.segment == y.segment) return true;
    if (x.coefficient != y.coefficient) return false;
    for (std::size_t i = 0; i < x.segment.rows(); ++i) {
        if (!rows_disjoint(x.segment.row(i), y.segment.row(i))) return false;
    }
    return true;
}

Term combine(const Term& x, const Term& y) {
    if (!can_combine(x, y)) throw std::invalid_argument("combine: terms are not compatible");
    if (x.segment == y.segment) return {x.coefficient + y.coefficient, x.segment};
    std::vector<RowInterval> rows(x.segment.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = x.segment.row(i).empty() ? y.segment.row(i) : x.segment.row(i);
    return {x.coefficient, Segment(std::move(rows))};
}

void add_term(std::vector<Term>& terms, Term t) {
    std::size_t pos = terms.size();
    for (;;) {
        auto it = std::find_if(terms.rbegin(), terms.rend(), [&](const Term& x) { return can_combine(x, t); });
        if (it == terms.rend()) break;
        const auto j = static_cast<std::size_t>(std::distance(it, terms.rend()) - 1);
        t = combine(terms[j], t);
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
        pos = std::min(pos, j);
    }
    terms.insert(terms.begin() + static_cast<std::ptrdiff_t>(pos), std::move(t));
}

Decomposition merge_terms(const Decomposition& d) {
    Decomposition out;
    out.terms.reserve(d.size());
    for (const Term& t : d.terms) add_term(out.terms, t);
    return out;
}

std::optional<Decomposition> rebuild(const IntensityMatrix& a, const Term& lead, std::span<const Term> rest,
                                     std::size_t exact_bound) {
    if (lead.coefficient < 1 || !lead.segment.has_support() || !lead.segment.fits(a.cols()) ||
        a.min_over(lead.segment) < lead.coefficient) {
        return std::nullopt;
    }
    IntensityMatrix residual = a;
    std::vector<Term> terms;
    terms.reserve(rest.size() + 4);
    residual.subtract_in_place(lead.coefficient, lead.segment);
    add_term(terms, lead);

    for (const Term& t : rest) {
        if (!t.segment.has_support()) continue;
        const Intensity feasible = residual.min_over(t.segment);
        if (feasible < 1) continue;
        const Intensity u = std::min(t.coefficient, feasible);
        residual.subtract_in_place(u, t.segment);
        add_term(terms, {u, t.segment});
    }

    for (Term& t : engel_decompose(residual, Rule::Last).terms) add_term(terms, std::move(t));

    Decomposition built{std::move(terms)};
    const DistanceMatrix dist = distance_matrix(built);
    const SegmentOrder order = built.size() <= std::min(exact_bound, kMaxExactBound)
                                   ? exact_path(dist, kMaxExactBound)
                                   : two_opt_path(identity_order(built.size()), dist);
    return reorder(built, order);
}

std::size_t for_each_neighbor(const IntensityMatrix& a, const Decomposition& d, const NeighborVisitor& visit,
                              const NeighborhoodOptions& options) {
    std::size_t visited = 0;
    std::vector<Term> rest;
    std::vector<Segment> leads;
    for (std::size_t k = 0; k < d.size(); ++k) {
        rest.clear();
        for (std::size_t t = 0; t < d.size(); ++t) {
            if (t != k) rest.push_back(d.terms[t]);
        }
        const Segment& base = d.terms[k].segment;
        leads.clear();
        leads.push_back(base);
        for (std::size_t i = 0; i < base.rows(); ++i) {
            for (const auto& [dl, dr] : kLineMoves) {
                auto s = perturb(base, {i, dl, dr}, a.cols());
                if (s && *s != base && s->has_support()) leads.push_back(std::move(*s));
            }
        }
        for (const Segment& s : leads) {
            Intensity top = a.min_over(s);
            if (options.max_coefficient > 0) top = std::min(top, options.max_coefficient);
            for (Intensity u = 1; u <= top; ++u) {
                if (auto nb = rebuild(a, {u, s}, rest, options.exact_sequence_bound)) {
                    ++visited;
                    visit(std::move(*nb));
                }
            }
        }
    }
    return visited;
}

std::vector<Decomposition> enumerate_neighbors(const IntensityMatrix& a, const Decomposition& d,
                                               const NeighborhoodOptions& options) {
    std::vector<Decomposition> out;
    for_each_neighbor(a, d, [&](Decomposition&& nb) { out.push_back(std::move(nb)); }, options);
    return out;
}

std::size_t neighbor_bound(const IntensityMatrix& a, const Decomposition& d) noexcept {
    return d.size() * static_cast<std::size_t>(a.max_entry()) * (8 * a.rows() + 1);
}

}  // namespace mlcseg
