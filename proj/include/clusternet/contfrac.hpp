#pragma once

#include "clusternet/paths.hpp"
#include "clusternet/xseries.hpp"

namespace clusternet {

// Finite continued fraction a0 + b1/(a1 + b2/(a2 + ... + bm/am)). The depth
// is the number of fraction bars, i.e. terms.size().
struct CFSpec {
    XSeries a0;
    std::vector<std::pair<XSeries, XSeries>> terms;  // (b_i, a_i)

    int depth() const { return static_cast<int>(terms.size()); }
};

// Bottom-up evaluation, truncated at N. Every intermediate denominator must
// be a unit; a violation reports the failing level.
XSeries cf_eval(const CFSpec& spec, int N);

// Two-term recurrence P_m = alpha * P_{m-1} - beta * P_{m-2}.
struct PolyRecurrence {
    XSeries p0;
    XSeries p1;
    XSeries alpha;
    XSeries beta;
};

std::vector<XSeries> recurrence_seq(const PolyRecurrence& rec, int m);

// The determinant recurrence whose ratios give the bounded-height series of
// the statistic.
PolyRecurrence statistic_recurrence(const StatisticSpec& spec, int N);

// Bounded-height generating function of the statistic as a ratio of
// recurrence polynomials (m >= 1).
XSeries bounded_ratio_gf(const StatisticSpec& spec, int m, int N);

// Bounded-height generating function as a depth-(m+1) continued fraction.
CFSpec statistic_cf(const StatisticSpec& spec, int m, int N);

// Unbounded generating function from the square-root closed form. The correct
// branch has constant coefficient 1, which is checked.
XSeries closed_form_gf(const StatisticSpec& spec, int N);

// Height-restricted families with published closed forms or continued
// fractions (all at marking variable 0, so arity 0 throughout).
CFSpec ascent_end_restricted_cf(const HeightSet& A, int depth, int N);
CFSpec peak_valley_restricted_cf(const HeightSet& P, const HeightSet& V, int depth, int N);

enum class NamedClosedForm {
    AscentEndEven,
    AscentEndOdd,
    PeakOddValleyEven,
    PeakEvenValleyOdd,
    PeakOddValleyOdd,
    PeakEvenValleyEven,
};

XSeries named_closed_form_gf(NamedClosedForm which, int N);

// Closed-count corollaries for coefficient checks.
BigInt one_ascent_count(int n);      // Fib(n+3) - n - 2 for n >= 1
BigInt max_ascent_odd_count(int n);  // paths of length 2n+1 with n ascents: C(n+2, 2)
BigInt one_plateau_count(int n);     // 2^{n-1} - 1 for n >= 1
BigInt two_plateau_count(int n);     // (n-3) n 2^{n-6} for n >= 3
// The published binomial sum for one-peak counts; reported as a diagnostic
// only, since it does not match the enumerated counts under any obvious index
// convention (see README).
BigInt one_peak_sum(int n);

}  // namespace clusternet
