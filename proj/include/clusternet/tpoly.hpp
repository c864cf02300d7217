#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "clusternet/rational.hpp"

namespace clusternet {

// Multivariate polynomial in marking variables t1..tk with exact rational
// coefficients. The arity k is fixed at construction; operations between
// polynomials of different arity throw ArityError. Zero coefficients are
// never stored.
//
// Exponent vectors are packed into a 64-bit key, one byte per variable with
// variable 0 in the most significant byte, so the key order is the lex order
// on exponent vectors. Degrees stay far below 255 in every computation the
// library performs.
class TPoly {
public:
    static constexpr int kMaxArity = 8;
    using Key = std::uint64_t;

    explicit TPoly(int arity = 0);

    static TPoly constant(int arity, Rational value);
    static TPoly variable(int arity, int index);
    static TPoly monomial(int arity, std::span<const int> exponents, Rational coeff);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the empty monomial (zero if absent).
    Rational constant_term() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;

    TPoly& operator+=(const TPoly& rhs);
    TPoly& operator-=(const TPoly& rhs);
    TPoly operator+(const TPoly& rhs) const;
    TPoly operator-(const TPoly& rhs) const;
    TPoly operator-() const;
    TPoly operator*(const TPoly& rhs) const;
    TPoly& operator*=(const Rational& scalar);
    TPoly scaled(const Rational& scalar) const;

    // Substitutes t_v -> t_v + delta[v] for every variable.
    TPoly shifted(std::span<const Rational> delta) const;
    Rational evaluated(std::span<const Rational> at) const;

    const std::map<Key, Rational>& terms() const { return terms_; }

    static int key_exponent(Key key, int var);
    static Key make_key(std::span<const int> exponents);
    static int key_degree(Key key, int arity);

    bool operator==(const TPoly& rhs) const = default;

private:
    void check_arity(const TPoly& rhs) const;
    void add_term(Key key, const Rational& value);

    int arity_;
    std::map<Key, Rational> terms_;
};

}  // namespace clusternet
