#include "clusternet/contfrac.hpp"

#include "clusternet/errors.hpp"

namespace clusternet {

namespace {

XSeries one_minus_x(int N, int arity) {
    return XSeries::one(N, arity) - XSeries::x_power(N, arity, 1);
}

TPoly t_minus_one(int arity, int var) {
    return TPoly::variable(arity, var) - TPoly::constant(arity, 1);
}

struct PeakValleyTerms {
    XSeries c1;
    XSeries c2;
    XSeries c3;
};

// C1 = x^2(t1-1) / (1 - x^2(t1-1)(t2-1)), C2 and C3 likewise.
PeakValleyTerms peak_valley_terms(int N) {
    const TPoly u1 = t_minus_one(2, 0);
    const TPoly u2 = t_minus_one(2, 1);
    const XSeries denom_inv =
        (XSeries::one(N, 2) - XSeries::x_power(N, 2, 2).scaled(u1 * u2)).inverse();
    PeakValleyTerms terms{
        XSeries::x_power(N, 2, 2).scaled(u1) * denom_inv,
        XSeries::x_power(N, 2, 2).scaled(u2) * denom_inv,
        XSeries::x_power(N, 2, 3).scaled(u1 * u2) * denom_inv,
    };
    return terms;
}

void check_unit_head(const XSeries& f, const char* what) {
    if (f.coeff(0) != TPoly::constant(f.arity(), 1)) {
        throw RootError(std::string(what) + ": wrong branch, constant coefficient is not 1");
    }
}

}  // namespace

XSeries cf_eval(const CFSpec& spec, int N) {
    // Bottom-up: v = a_m, then v = a_i + b_{i+1} / v down to i = 1, and
    // finally a_0 + b_1 / v.
    if (spec.depth() == 0) return spec.a0.truncated(N);
    XSeries v = spec.terms.back().second.truncated(N);
    for (int level = spec.depth() - 1; level >= 1; --level) {
        const XSeries& b_next = spec.terms[static_cast<size_t>(level)].first;
        const XSeries& a_here = spec.terms[static_cast<size_t>(level - 1)].second;
        try {
            v = a_here.truncated(N) + b_next.truncated(N) * v.inverse();
        } catch (const UnitError&) {
            throw CfEvalError("continued fraction denominator is not a unit at level " +
                                  std::to_string(level + 1),
                              level + 1);
        }
    }
    try {
        return spec.a0.truncated(N) + spec.terms.front().first.truncated(N) * v.inverse();
    } catch (const UnitError&) {
        throw CfEvalError("continued fraction denominator is not a unit at level 1", 1);
    }
}

std::vector<XSeries> recurrence_seq(const PolyRecurrence& rec, int m) {
    if (m < 0) throw RangeError("recurrence_seq: negative index");
    std::vector<XSeries> seq{rec.p0};
    if (m >= 1) seq.push_back(rec.p1);
    for (int i = 2; i <= m; ++i) {
        seq.push_back(rec.alpha * seq[static_cast<size_t>(i - 1)] -
                      rec.beta * seq[static_cast<size_t>(i - 2)]);
    }
    return seq;
}

namespace {

// Denominator body and fraction numerator of the bounded continued fraction,
// shared by the recurrence, the CF, and the closed form.
struct StatisticTerms {
    XSeries alpha;       // generic denominator level
    XSeries beta;        // fraction numerator (subtracted)
    XSeries first;       // top denominator level (differs only for peak/valley)
    XSeries last;        // bottom denominator level
    XSeries seed0;       // P_0
    XSeries seed1;       // P_1
};

StatisticTerms statistic_terms(const StatisticSpec& spec, int N) {
    const int arity = spec.arity();
    const XSeries one = XSeries::one(N, arity);
    const XSeries omx = one_minus_x(N, arity);
    switch (spec.kind) {
        case StatKind::Ascent: {
            const TPoly u = t_minus_one(1, 0);
            XSeries alpha = omx - XSeries::x_power(N, 1, 2).scaled(u);
            XSeries beta = XSeries::x_power(N, 1, 2) + XSeries::x_power(N, 1, 3).scaled(u);
            return {alpha, beta, alpha, omx, one, omx};
        }
        case StatKind::Peak:
        case StatKind::PlateauK: {
            const int k = spec.kind == StatKind::Peak ? 0 : spec.k;
            const TPoly u = t_minus_one(1, 0);
            XSeries alpha = omx - XSeries::x_power(N, 1, k + 2).scaled(u);
            XSeries beta = XSeries::x_power(N, 1, 2);
            return {alpha, beta, alpha, omx, one, omx};
        }
        case StatKind::PlateauAll: {
            const TPoly u = t_minus_one(1, 0);
            XSeries correction = XSeries::x_power(N, 1, 2).scaled(u) * omx.inverse();
            XSeries alpha = omx - correction;
            XSeries beta = XSeries::x_power(N, 1, 2);
            return {alpha, beta, alpha, omx, one, omx};
        }
        case StatKind::PeakAndValley: {
            PeakValleyTerms c = peak_valley_terms(N);
            XSeries alpha = omx - c.c1 - c.c2;
            XSeries x_plus_c3 = XSeries::x_power(N, 2, 1) + c.c3;
            XSeries beta = x_plus_c3 * x_plus_c3;
            return {alpha, beta, omx - c.c1, omx - c.c2, one, omx - c.c2};
        }
        case StatKind::Valley:
            break;
    }
    throw ConfigError("no continued-fraction form for this statistic");
}

}  // namespace

PolyRecurrence statistic_recurrence(const StatisticSpec& spec, int N) {
    StatisticTerms terms = statistic_terms(spec, N);
    return PolyRecurrence{terms.seed0, terms.seed1, terms.alpha, terms.beta};
}

XSeries bounded_ratio_gf(const StatisticSpec& spec, int m, int N) {
    if (m < 1) throw RangeError("bounded_ratio_gf: bound must be at least 1");
    StatisticTerms terms = statistic_terms(spec, N);
    auto seq = recurrence_seq(statistic_recurrence(spec, N), m + 1);
    if (spec.kind == StatKind::PeakAndValley) {
        // R_m / ((1 - x - C1) R_m - (x + C3)^2 R_{m-1})
        const XSeries& rm = seq[static_cast<size_t>(m)];
        const XSeries& rm1 = seq[static_cast<size_t>(m - 1)];
        return XSeries::div_exact(rm, terms.first * rm - terms.beta * rm1);
    }
    return XSeries::div_exact(seq[static_cast<size_t>(m)], seq[static_cast<size_t>(m + 1)]);
}

CFSpec statistic_cf(const StatisticSpec& spec, int m, int N) {
    if (m < 1) throw RangeError("statistic_cf: bound must be at least 1");
    StatisticTerms terms = statistic_terms(spec, N);
    const int arity = spec.arity();
    CFSpec cf{XSeries(N, arity), {}};
    cf.terms.emplace_back(XSeries::one(N, arity), terms.first);
    for (int level = 2; level <= m; ++level) {
        cf.terms.emplace_back(-terms.beta, terms.alpha);
    }
    cf.terms.emplace_back(-terms.beta, terms.last);
    return cf;
}

XSeries closed_form_gf(const StatisticSpec& spec, int N) {
    const int padded = N + 2;
    const int arity = spec.arity();
    const XSeries one = XSeries::one(padded, arity);

    XSeries result(N, arity);
    if (spec.kind == StatKind::PeakAndValley) {
        PeakValleyTerms c = peak_valley_terms(N);
        XSeries omx = one_minus_x(N, 2);
        XSeries x_plus_c3 = XSeries::x_power(N, 2, 1) + c.c3;
        XSeries body = omx - c.c1 - c.c2;
        XSeries radicand = body * body - x_plus_c3.scaled(Rational(4)) * x_plus_c3;
        XSeries denom = omx - c.c1 + c.c2 + radicand.sqrt();
        result = XSeries::constant(N, 2, 2) * denom.inverse();
    } else {
        StatisticTerms terms = statistic_terms(spec, padded);
        XSeries radicand = terms.alpha * terms.alpha - terms.beta.scaled(Rational(4));
        XSeries numerator = terms.alpha - radicand.sqrt();
        result = XSeries::div_exact(numerator, terms.beta.scaled(Rational(2)));
        if (result.order() != N) result = result.truncated(N);
    }
    check_unit_head(result, "closed_form_gf");
    return result;
}

CFSpec ascent_end_restricted_cf(const HeightSet& A, int depth, int N) {
    if (depth < 1) throw RangeError("ascent_end_restricted_cf: depth must be at least 1");
    CFSpec cf{XSeries(N, 0), {}};
    const XSeries omx = one_minus_x(N, 0);
    const XSeries x2 = XSeries::x_power(N, 0, 2);
    const XSeries x3 = XSeries::x_power(N, 0, 3);
    XSeries b_next = XSeries::one(N, 0);
    for (int level = 1; level <= depth; ++level) {
        const bool corrected = !A.contains(level);
        XSeries a = corrected ? omx + x2 : omx;
        cf.terms.emplace_back(b_next, a);
        // x^2 - x * C_level feeds the next fraction bar.
        b_next = corrected ? -(x2 - x3) : -x2;
    }
    return cf;
}

CFSpec peak_valley_restricted_cf(const HeightSet& P, const HeightSet& V, int depth, int N) {
    if (depth < 1) throw RangeError("peak_valley_restricted_cf: depth must be at least 1");
    const XSeries omx = one_minus_x(N, 0);
    const XSeries x2 = XSeries::x_power(N, 0, 2);
    const XSeries geometric = (XSeries::one(N, 0) - x2).inverse();
    const XSeries x2_geo = x2 * geometric;
    const XSeries x3_geo = XSeries::x_power(N, 0, 3) * geometric;
    auto c1 = [&](int i) {
        if (P.contains(i)) return XSeries(N, 0);
        return V.contains(i + 1) ? x2 : x2_geo;
    };
    auto c2 = [&](int i) {
        if (V.contains(i)) return XSeries(N, 0);
        return P.contains(i - 1) ? x2 : x2_geo;
    };
    auto c3 = [&](int i) {
        if (P.contains(i) || V.contains(i + 1)) return XSeries(N, 0);
        return x3_geo;
    };
    CFSpec cf{XSeries(N, 0), {}};
    cf.terms.emplace_back(XSeries::one(N, 0), omx + c1(0));
    for (int i = 1; i < depth; ++i) {
        XSeries x_plus = XSeries::x_power(N, 0, 1) + c3(i - 1);
        cf.terms.emplace_back(-(x_plus * x_plus), omx + c1(i) + c2(i));
    }
    return cf;
}

namespace {

XSeries polynomial_series(int order, std::initializer_list<long long> coeffs) {
    std::vector<Rational> values;
    for (long long c : coeffs) values.emplace_back(c);
    return XSeries::from_rationals(order, 0, values);
}

}  // namespace

XSeries named_closed_form_gf(NamedClosedForm which, int N) {
    const int padded = N + 2;
    XSeries result(N, 0);
    switch (which) {
        case NamedClosedForm::AscentEndEven: {
            XSeries radicand = polynomial_series(padded, {1, -4, 4, 0, -4, 4});
            XSeries num = polynomial_series(padded, {1, -2, 2}) - radicand.sqrt();
            result = XSeries::div_exact(num, polynomial_series(padded, {0, 0, 2, -2, 2}));
            break;
        }
        case NamedClosedForm::AscentEndOdd: {
            XSeries radicand = polynomial_series(padded, {1, -4, 4, 0, -4, 4});
            XSeries num = polynomial_series(padded, {1, -2, 2, -2}) - radicand.sqrt();
            result = XSeries::div_exact(num, polynomial_series(padded, {0, 0, 2, -4, 2}));
            break;
        }
        case NamedClosedForm::PeakOddValleyEven: {
            XSeries radicand = polynomial_series(padded, {1, -4, 4, 0, -4});
            XSeries num = polynomial_series(padded, {1, -2, 2, 0, -2}) - radicand.sqrt();
            result = XSeries::div_exact(num, polynomial_series(padded, {0, 0, 2, -2, 0, 2}));
            break;
        }
        case NamedClosedForm::PeakEvenValleyOdd: {
            XSeries radicand = polynomial_series(N, {1, -4, 4, 0, -4});
            XSeries den = polynomial_series(N, {1, -2, 0, 2}) + radicand.sqrt();
            result = polynomial_series(N, {2, -2, 0, 2}) * den.inverse();
            break;
        }
        case NamedClosedForm::PeakOddValleyOdd: {
            XSeries radicand = polynomial_series(N, {1, -4, 6, -8, 5, -4, 4});
            XSeries den = polynomial_series(N, {1, -2, 1}) + radicand.sqrt();
            result = polynomial_series(N, {2, -2}) * den.inverse();
            break;
        }
        case NamedClosedForm::PeakEvenValleyEven: {
            XSeries radicand = polynomial_series(padded, {1, -4, 6, -8, 5, -4, 4});
            XSeries num = polynomial_series(padded, {1, -2, 3, -2}) - radicand.sqrt();
            result = XSeries::div_exact(num, polynomial_series(padded, {0, 0, 2, -2}));
            break;
        }
    }
    check_unit_head(result, "named_closed_form_gf");
    return result;
}

BigInt one_ascent_count(int n) {
    if (n < 1) throw RangeError("one_ascent_count: n must be at least 1");
    return fibonacci(n + 3) - n - 2;
}

BigInt max_ascent_odd_count(int n) {
    if (n < 0) throw RangeError("max_ascent_odd_count: n must be non-negative");
    return binomial(n + 2, 2);
}

BigInt one_plateau_count(int n) {
    if (n < 1) throw RangeError("one_plateau_count: n must be at least 1");
    return (BigInt(1) << (n - 1)) - 1;
}

BigInt two_plateau_count(int n) {
    if (n < 3) throw RangeError("two_plateau_count: n must be at least 3");
    Rational value = Rational(n - 3) * n * pow_rational(Rational(2), std::max(0, n - 6)) /
                     pow_rational(Rational(2), std::max(0, 6 - n));
    if (!is_integer(value)) throw RangeError("two_plateau_count: non-integral value");
    return to_integer(value);
}

BigInt one_peak_sum(int n) {
    BigInt total = 0;
    for (int k = 0; k <= n - 2; ++k) {
        total += binomial(k + 1, n - k + 1) * binomial(k, n - k);
    }
    return total;
}

}  // namespace clusternet
