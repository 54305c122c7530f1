#include "mlcseg/decomposition.hpp"

#include <stdexcept>

namespace mlcseg {

std::ostream& operator<<(std::ostream& os, const ObjectiveVector& y) {
    return os << '(' << y.dt << ',' << y.dc << ',' << y.su << ')';
}

Intensity setup_time(const Decomposition& d) {
    Intensity su = 0;
    for (std::size_t k = 1; k < d.terms.size(); ++k) su += mu(d.terms[k - 1].segment, d.terms[k].segment);
    return su;
}

ObjectiveVector evaluate(const Decomposition& d) {
    ObjectiveVector y;
    for (const Term& t : d.terms) y.dt += t.coefficient;
    y.dc = static_cast<Intensity>(d.terms.size());
    y.su = setup_time(d);
    return y;
}

IntensityMatrix reconstruct(const Decomposition& d, std::size_t rows, std::size_t cols) {
    std::vector<Intensity> sum(rows * cols, 0);
    for (const Term& t : d.terms) {
        if (t.segment.rows() != rows) throw std::invalid_argument("reconstruct: row-count mismatch");
        if (!t.segment.fits(cols)) throw std::invalid_argument("reconstruct: segment exceeds width");
        for (std::size_t i = 0; i < rows; ++i) {
            const RowInterval& iv = t.segment.row(i);
            for (int j = iv.left; j < iv.right - 1; ++j) sum[i * cols + static_cast<std::size_t>(j)] += t.coefficient;
        }
    }
    return IntensityMatrix(rows, cols, std::move(sum));
}

bool validate(const IntensityMatrix& a, const Decomposition& d) {
    for (const Term& t : d.terms) {
        if (t.segment.rows() != a.rows()) throw std::invalid_argument("validate: row-count mismatch");
        if (t.coefficient < 1 || !t.segment.fits(a.cols())) return false;
    }
    return reconstruct(d, a.rows(), a.cols()) == a;
}

IntensityMatrix subtract(const IntensityMatrix& a, Intensity u, const Segment& s) {
    if (u < 1) throw std::invalid_argument("subtract: coefficient must be at least 1");
    IntensityMatrix out = a;
    out.subtract_in_place(u, s);
    return out;
}

}  // namespace mlcseg
