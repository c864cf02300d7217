#include "clusternet/xseries.hpp"

#include "clusternet/errors.hpp"

namespace clusternet {

XSeries::XSeries(int order, int arity) : order_(order), arity_(arity) {
    if (order < 0) throw RangeError("XSeries truncation order must be non-negative");
    coeffs_.assign(static_cast<size_t>(order) + 1, TPoly(arity));
}

XSeries XSeries::constant(int order, int arity, Rational value) {
    XSeries s(order, arity);
    s.coeffs_[0] = TPoly::constant(arity, std::move(value));
    return s;
}

XSeries XSeries::x_power(int order, int arity, int power, Rational value) {
    XSeries s(order, arity);
    if (power < 0) throw RangeError("XSeries::x_power: negative power");
    if (power <= order) s.coeffs_[static_cast<size_t>(power)] = TPoly::constant(arity, std::move(value));
    return s;
}

XSeries XSeries::from_rationals(int order, int arity, std::span<const Rational> coeffs) {
    XSeries s(order, arity);
    for (size_t n = 0; n < coeffs.size() && n <= static_cast<size_t>(order); ++n) {
        s.coeffs_[n] = TPoly::constant(arity, coeffs[n]);
    }
    return s;
}

const TPoly& XSeries::coeff(int n) const {
    if (n < 0 || n > order_) {
        throw RangeError("XSeries coefficient index " + std::to_string(n) +
                         " outside truncation order " + std::to_string(order_));
    }
    return coeffs_[static_cast<size_t>(n)];
}

void XSeries::set_coeff(int n, TPoly value) {
    if (n < 0 || n > order_) throw RangeError("XSeries::set_coeff index out of range");
    if (value.arity() != arity_) throw ArityError("XSeries::set_coeff arity mismatch");
    coeffs_[static_cast<size_t>(n)] = std::move(value);
}

int XSeries::x_order() const {
    for (int n = 0; n <= order_; ++n) {
        if (!coeffs_[static_cast<size_t>(n)].is_zero()) return n;
    }
    return order_ + 1;
}

void XSeries::check_compatible(const XSeries& rhs) const {
    if (order_ != rhs.order_) {
        throw ArityError("XSeries truncation order mismatch: " + std::to_string(order_) +
                         " vs " + std::to_string(rhs.order_));
    }
    if (arity_ != rhs.arity_) {
        throw ArityError("XSeries arity mismatch: " + std::to_string(arity_) + " vs " +
                         std::to_string(rhs.arity_));
    }
}

XSeries& XSeries::operator+=(const XSeries& rhs) {
    check_compatible(rhs);
    for (int n = 0; n <= order_; ++n) coeffs_[static_cast<size_t>(n)] += rhs.coeffs_[static_cast<size_t>(n)];
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& rhs) {
    check_compatible(rhs);
    for (int n = 0; n <= order_; ++n) coeffs_[static_cast<size_t>(n)] -= rhs.coeffs_[static_cast<size_t>(n)];
    return *this;
}

XSeries XSeries::operator+(const XSeries& rhs) const {
    XSeries out = *this;
    out += rhs;
    return out;
}

XSeries XSeries::operator-(const XSeries& rhs) const {
    XSeries out = *this;
    out -= rhs;
    return out;
}

XSeries XSeries::operator-() const {
    XSeries out(order_, arity_);
    for (int n = 0; n <= order_; ++n) out.coeffs_[static_cast<size_t>(n)] = -coeffs_[static_cast<size_t>(n)];
    return out;
}

XSeries XSeries::operator*(const XSeries& rhs) const {
    check_compatible(rhs);
    XSeries out(order_, arity_);
    for (int i = 0; i <= order_; ++i) {
        const TPoly& a = coeffs_[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            const TPoly& b = rhs.coeffs_[static_cast<size_t>(j)];
            if (b.is_zero()) continue;
            out.coeffs_[static_cast<size_t>(i + j)] += a * b;
        }
    }
    return out;
}

XSeries XSeries::scaled(const Rational& scalar) const {
    XSeries out = *this;
    for (auto& c : out.coeffs_) c *= scalar;
    return out;
}

XSeries XSeries::scaled(const TPoly& factor) const {
    if (factor.arity() != arity_) throw ArityError("XSeries::scaled arity mismatch");
    XSeries out(order_, arity_);
    for (int n = 0; n <= order_; ++n) {
        if (!coeffs_[static_cast<size_t>(n)].is_zero()) {
            out.coeffs_[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)] * factor;
        }
    }
    return out;
}

XSeries XSeries::inverse() const {
    const TPoly& head = coeffs_[0];
    if (!head.is_constant() || head.constant_term() == 0) {
        throw UnitError("XSeries::inverse: constant coefficient is not a nonzero rational constant");
    }
    const Rational c0 = head.constant_term();
    const Rational c0_inv = Rational(1) / c0;
    XSeries out(order_, arity_);
    out.coeffs_[0] = TPoly::constant(arity_, c0_inv);
    for (int n = 1; n <= order_; ++n) {
        TPoly acc(arity_);
        for (int i = 1; i <= n; ++i) {
            const TPoly& fi = coeffs_[static_cast<size_t>(i)];
            if (fi.is_zero()) continue;
            acc += fi * out.coeffs_[static_cast<size_t>(n - i)];
        }
        acc *= -c0_inv;
        out.coeffs_[static_cast<size_t>(n)] = std::move(acc);
    }
    return out;
}

XSeries XSeries::div_exact(const XSeries& num, const XSeries& den) {
    num.check_compatible(den);
    const int d = den.x_order();
    if (d > den.order_) throw DivisionError("XSeries::div_exact: division by zero series");
    if (num.x_order() < d) {
        throw DivisionError("XSeries::div_exact: numerator has smaller x-order than denominator");
    }
    const int out_order = num.order_ - d;
    XSeries num_shifted(out_order, num.arity_);
    XSeries den_shifted(out_order, num.arity_);
    for (int n = 0; n <= out_order; ++n) {
        num_shifted.coeffs_[static_cast<size_t>(n)] = num.coeffs_[static_cast<size_t>(n + d)];
        den_shifted.coeffs_[static_cast<size_t>(n)] = den.coeffs_[static_cast<size_t>(n + d)];
    }
    return num_shifted * den_shifted.inverse();
}

XSeries XSeries::sqrt() const {
    const TPoly one = TPoly::constant(arity_, 1);
    if (coeffs_[0] != one) {
        throw RootError("XSeries::sqrt: constant coefficient must be 1");
    }
    // g_n solves 2 g_0 g_n = f_n - sum_{i=1}^{n-1} g_i g_{n-i} with g_0 = 1.
    XSeries out(order_, arity_);
    out.coeffs_[0] = one;
    for (int n = 1; n <= order_; ++n) {
        TPoly acc = coeffs_[static_cast<size_t>(n)];
        for (int i = 1; i < n; ++i) {
            acc -= out.coeffs_[static_cast<size_t>(i)] * out.coeffs_[static_cast<size_t>(n - i)];
        }
        acc *= Rational(1, 2);
        out.coeffs_[static_cast<size_t>(n)] = std::move(acc);
    }
    return out;
}

XSeries XSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_) {
        throw RangeError("XSeries::truncated: order out of range");
    }
    XSeries out(new_order, arity_);
    for (int n = 0; n <= new_order; ++n) out.coeffs_[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)];
    return out;
}

XSeries XSeries::shifted_t(std::span<const Rational> delta) const {
    XSeries out(order_, arity_);
    for (int n = 0; n <= order_; ++n) {
        out.coeffs_[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)].shifted(delta);
    }
    return out;
}

XSeries XSeries::eval_t(std::span<const Rational> at) const {
    XSeries out(order_, 0);
    for (int n = 0; n <= order_; ++n) {
        out.coeffs_[static_cast<size_t>(n)] =
            TPoly::constant(0, coeffs_[static_cast<size_t>(n)].evaluated(at));
    }
    return out;
}

TPoly coeff_extract(const XSeries& f, int n) { return f.coeff(n); }

Rational coeff_extract(const XSeries& f, int n, std::span<const Rational> at) {
    return f.coeff(n).evaluated(at);
}

}  // namespace clusternet
