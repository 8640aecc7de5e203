#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cyclefactor {

using Bigint = boost::multiprecision::cpp_int;

/// Quotient of an exact division. Throws std::logic_error if the division
/// leaves a remainder: every division in this library is exact by theory,
/// so a remainder means the theory (or the code) is broken. Never rounds.
inline Bigint exact_div(const Bigint& num, const Bigint& den) {
    if (den == 0) throw std::logic_error("exact_div: zero divisor");
    Bigint q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("exact_div: " + num.str() + " not divisible by " + den.str());
    }
    return q;
}

inline Bigint factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Bigint f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r = exact_div(r, i);
    }
    return r;
}

}  // namespace cyclefactor
