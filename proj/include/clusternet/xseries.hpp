#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clusternet/tpoly.hpp"

namespace clusternet {

// Power series in the length variable x, truncated at an inclusive order N,
// with TPoly coefficients. All arithmetic is exact modulo x^{N+1}. Binary
// operations require identical truncation order and arity.
class XSeries {
public:
    XSeries(int order, int arity);

    static XSeries constant(int order, int arity, Rational value);
    static XSeries one(int order, int arity) { return constant(order, arity, 1); }
    static XSeries x_power(int order, int arity, int power, Rational value = 1);
    // Convenience for tests and formula builders: c[n] is the coefficient of x^n.
    static XSeries from_rationals(int order, int arity, std::span<const Rational> coeffs);

    int order() const { return order_; }
    int arity() const { return arity_; }
    const TPoly& coeff(int n) const;
    void set_coeff(int n, TPoly value);
    // Smallest n with a nonzero coefficient; order()+1 when the series is zero.
    int x_order() const;
    bool is_zero() const { return x_order() > order_; }

    XSeries& operator+=(const XSeries& rhs);
    XSeries& operator-=(const XSeries& rhs);
    XSeries operator+(const XSeries& rhs) const;
    XSeries operator-(const XSeries& rhs) const;
    XSeries operator-() const;
    XSeries operator*(const XSeries& rhs) const;
    XSeries scaled(const Rational& scalar) const;
    XSeries scaled(const TPoly& factor) const;

    // Multiplicative inverse; requires the constant coefficient to be a
    // nonzero rational constant (t-degree 0).
    XSeries inverse() const;

    // Exact division num/den where den = x^d * u with u a unit. The result
    // carries truncation order N - d.
    static XSeries div_exact(const XSeries& num, const XSeries& den);

    // Square root with constant coefficient 1 on both sides.
    XSeries sqrt() const;

    XSeries truncated(int new_order) const;
    XSeries shifted_t(std::span<const Rational> delta) const;
    // Evaluates every marking variable; the result has arity 0.
    XSeries eval_t(std::span<const Rational> at) const;

    bool operator==(const XSeries& rhs) const = default;

private:
    void check_compatible(const XSeries& rhs) const;

    int order_;
    int arity_;
    std::vector<TPoly> coeffs_;
};

// Coefficient extraction, optionally evaluated at a t-assignment.
TPoly coeff_extract(const XSeries& f, int n);
Rational coeff_extract(const XSeries& f, int n, std::span<const Rational> at);

}  // namespace clusternet
