#include "clusternet/rational.hpp"

#include <stdexcept>

namespace clusternet {

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

Rational pow_rational(const Rational& q, int e) {
    if (e < 0) throw std::invalid_argument("pow_rational: negative exponent");
    Rational result = 1;
    Rational base = q;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

BigInt fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = b;
        b = next;
    }
    return a;
}

}  // namespace clusternet
