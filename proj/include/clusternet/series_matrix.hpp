#pragma once

#include <vector>

#include "clusternet/xseries.hpp"

namespace clusternet {

// Square matrix of XSeries with uniform truncation order and arity.
class SeriesMatrix {
public:
    SeriesMatrix(int dim, int order, int arity);

    static SeriesMatrix identity(int dim, int order, int arity);

    int dim() const { return dim_; }
    int order() const { return order_; }
    int arity() const { return arity_; }

    const XSeries& at(int i, int j) const;
    XSeries& at(int i, int j);

    SeriesMatrix operator+(const SeriesMatrix& rhs) const;
    SeriesMatrix operator-(const SeriesMatrix& rhs) const;
    SeriesMatrix operator*(const SeriesMatrix& rhs) const;
    SeriesMatrix eval_t(std::span<const Rational> at) const;
    SeriesMatrix shifted_t(std::span<const Rational> delta) const;

    bool operator==(const SeriesMatrix& rhs) const = default;

private:
    void check_compatible(const SeriesMatrix& rhs) const;

    int dim_;
    int order_;
    int arity_;
    std::vector<XSeries> entries_;
};

// (I - M)^{-1} for a matrix whose entries all have x-order >= 1. Computed by
// Gauss-Jordan elimination over the series ring; every pivot is a unit because
// diagonal entries stay of the form 1 + O(x) throughout.
SeriesMatrix invert_id_minus(const SeriesMatrix& m);

}  // namespace clusternet
