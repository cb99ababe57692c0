#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace chowkit {

// Exact arithmetic everywhere: no floating point in the symbolic core.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Asserts the denominator cleared and returns the integer part.
inline Integer to_integer(const Rational& q, const char* what = "value") {
    if (!is_integral(q))
        throw std::runtime_error(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num();
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Integer binomial(const Integer& n, unsigned k) {
    Integer num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - static_cast<long>(i);
        den *= static_cast<long>(i) + 1;
    }
    return num / den;
}

} // namespace chowkit
