#include "clusternet/series_matrix.hpp"

#include "clusternet/errors.hpp"

namespace clusternet {

SeriesMatrix::SeriesMatrix(int dim, int order, int arity)
    : dim_(dim), order_(order), arity_(arity) {
    if (dim <= 0) throw RangeError("SeriesMatrix dimension must be positive");
    entries_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), XSeries(order, arity));
}

SeriesMatrix SeriesMatrix::identity(int dim, int order, int arity) {
    SeriesMatrix m(dim, order, arity);
    for (int i = 0; i < dim; ++i) m.at(i, i) = XSeries::one(order, arity);
    return m;
}

const XSeries& SeriesMatrix::at(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw RangeError("SeriesMatrix index out of range");
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
}

XSeries& SeriesMatrix::at(int i, int j) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw RangeError("SeriesMatrix index out of range");
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
}

void SeriesMatrix::check_compatible(const SeriesMatrix& rhs) const {
    if (dim_ != rhs.dim_ || order_ != rhs.order_ || arity_ != rhs.arity_) {
        throw ArityError("SeriesMatrix shape, order, or arity mismatch");
    }
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& rhs) const {
    check_compatible(rhs);
    SeriesMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& rhs) const {
    check_compatible(rhs);
    SeriesMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& rhs) const {
    check_compatible(rhs);
    SeriesMatrix out(dim_, order_, arity_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const XSeries& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const XSeries& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

SeriesMatrix SeriesMatrix::eval_t(std::span<const Rational> at_values) const {
    SeriesMatrix out(dim_, order_, 0);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) out.at(i, j) = at(i, j).eval_t(at_values);
    }
    return out;
}

SeriesMatrix SeriesMatrix::shifted_t(std::span<const Rational> delta) const {
    SeriesMatrix out(dim_, order_, arity_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) out.at(i, j) = at(i, j).shifted_t(delta);
    }
    return out;
}

SeriesMatrix invert_id_minus(const SeriesMatrix& m) {
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (m.at(i, j).x_order() < 1) {
                throw UnitError("invert_id_minus: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") has a nonzero constant term");
            }
        }
    }
    const int dim = m.dim();
    SeriesMatrix a = SeriesMatrix::identity(dim, m.order(), m.arity()) - m;
    SeriesMatrix r = SeriesMatrix::identity(dim, m.order(), m.arity());
    for (int k = 0; k < dim; ++k) {
        const XSeries pivot_inv = a.at(k, k).inverse();
        for (int j = 0; j < dim; ++j) {
            a.at(k, j) = a.at(k, j) * pivot_inv;
            r.at(k, j) = r.at(k, j) * pivot_inv;
        }
        for (int i = 0; i < dim; ++i) {
            if (i == k) continue;
            const XSeries factor = a.at(i, k);
            if (factor.is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                a.at(i, j) -= factor * a.at(k, j);
                r.at(i, j) -= factor * r.at(k, j);
            }
        }
    }
    return r;
}

}  // namespace clusternet
