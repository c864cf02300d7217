#include "clusternet/tpoly.hpp"

#include <cassert>

#include "clusternet/errors.hpp"

namespace clusternet {

TPoly::TPoly(int arity) : arity_(arity) {
    if (arity < 0 || arity > kMaxArity) {
        throw ArityError("TPoly arity out of range: " + std::to_string(arity));
    }
}

TPoly TPoly::constant(int arity, Rational value) {
    TPoly p(arity);
    if (value != 0) p.terms_.emplace(Key{0}, std::move(value));
    return p;
}

TPoly TPoly::variable(int arity, int index) {
    TPoly p(arity);
    if (index < 0 || index >= arity) {
        throw ArityError("TPoly variable index out of range");
    }
    std::vector<int> exps(static_cast<size_t>(arity), 0);
    exps[static_cast<size_t>(index)] = 1;
    p.terms_.emplace(make_key(exps), Rational(1));
    return p;
}

TPoly TPoly::monomial(int arity, std::span<const int> exponents, Rational coeff) {
    TPoly p(arity);
    if (static_cast<int>(exponents.size()) != arity) {
        throw ArityError("TPoly monomial exponent count does not match arity");
    }
    if (coeff != 0) p.terms_.emplace(make_key(exponents), std::move(coeff));
    return p;
}

bool TPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational TPoly::constant_term() const {
    auto it = terms_.find(Key{0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int TPoly::degree() const {
    int deg = -1;
    for (const auto& [key, value] : terms_) {
        deg = std::max(deg, key_degree(key, arity_));
    }
    return deg;
}

void TPoly::check_arity(const TPoly& rhs) const {
    if (arity_ != rhs.arity_) {
        throw ArityError("TPoly arity mismatch: " + std::to_string(arity_) + " vs " +
                         std::to_string(rhs.arity_));
    }
}

void TPoly::add_term(Key key, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
    check_arity(rhs);
    for (const auto& [key, value] : rhs.terms_) add_term(key, value);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
    check_arity(rhs);
    for (const auto& [key, value] : rhs.terms_) add_term(key, -value);
    return *this;
}

TPoly TPoly::operator+(const TPoly& rhs) const {
    TPoly out = *this;
    out += rhs;
    return out;
}

TPoly TPoly::operator-(const TPoly& rhs) const {
    TPoly out = *this;
    out -= rhs;
    return out;
}

TPoly TPoly::operator-() const {
    TPoly out(arity_);
    for (const auto& [key, value] : terms_) out.terms_.emplace(key, -value);
    return out;
}

TPoly TPoly::operator*(const TPoly& rhs) const {
    check_arity(rhs);
    TPoly out(arity_);
    for (const auto& [ka, va] : terms_) {
        for (const auto& [kb, vb] : rhs.terms_) {
            // Per-byte sums stay below 256 for every degree this library
            // produces, so plain key addition is monomial multiplication.
            out.add_term(ka + kb, va * vb);
        }
    }
    return out;
}

TPoly& TPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, value] : terms_) value *= scalar;
    return *this;
}

TPoly TPoly::scaled(const Rational& scalar) const {
    TPoly out = *this;
    out *= scalar;
    return out;
}

TPoly TPoly::shifted(std::span<const Rational> delta) const {
    if (static_cast<int>(delta.size()) != arity_) {
        throw ArityError("TPoly shift arity mismatch");
    }
    TPoly out(arity_);
    for (const auto& [key, coeff] : terms_) {
        // Expand the product over v of (t_v + delta_v)^{e_v}.
        std::vector<std::pair<Key, Rational>> acc{{Key{0}, coeff}};
        for (int v = 0; v < arity_; ++v) {
            const int e = key_exponent(key, v);
            if (e == 0) continue;
            const int shift = 8 * (kMaxArity - 1 - v);
            if (delta[static_cast<size_t>(v)] == 0) {
                for (auto& [k, c] : acc) k += static_cast<Key>(e) << shift;
                continue;
            }
            std::vector<std::pair<Key, Rational>> next;
            next.reserve(acc.size() * static_cast<size_t>(e + 1));
            for (const auto& [k, c] : acc) {
                for (int j = 0; j <= e; ++j) {
                    Rational term = c * Rational(binomial(e, j)) *
                                    pow_rational(delta[static_cast<size_t>(v)], e - j);
                    next.emplace_back(k + (static_cast<Key>(j) << shift), std::move(term));
                }
            }
            acc = std::move(next);
        }
        for (const auto& [k, c] : acc) out.add_term(k, c);
    }
    return out;
}

Rational TPoly::evaluated(std::span<const Rational> at) const {
    if (static_cast<int>(at.size()) != arity_) {
        throw ArityError("TPoly evaluation arity mismatch");
    }
    Rational total = 0;
    for (const auto& [key, coeff] : terms_) {
        Rational term = coeff;
        for (int v = 0; v < arity_; ++v) {
            const int e = key_exponent(key, v);
            if (e > 0) term *= pow_rational(at[static_cast<size_t>(v)], e);
        }
        total += term;
    }
    return total;
}

int TPoly::key_exponent(Key key, int var) {
    return static_cast<int>((key >> (8 * (kMaxArity - 1 - var))) & 0xff);
}

TPoly::Key TPoly::make_key(std::span<const int> exponents) {
    Key key = 0;
    for (size_t v = 0; v < exponents.size(); ++v) {
        assert(exponents[v] >= 0 && exponents[v] < 256);
        key |= static_cast<Key>(exponents[v]) << (8 * (kMaxArity - 1 - static_cast<int>(v)));
    }
    return key;
}

int TPoly::key_degree(Key key, int arity) {
    int deg = 0;
    for (int v = 0; v < arity; ++v) deg += key_exponent(key, v);
    return deg;
}

}  // namespace clusternet
