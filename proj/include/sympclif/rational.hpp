#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sympclif {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// C(n, k); zero when k is out of range.
inline Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// (2j-1)!! with the empty-product convention (-1)!! = 1.
inline Integer odd_double_factorial(int j) {
    if (j < 0) throw std::invalid_argument("odd_double_factorial: negative argument");
    Integer r = 1;
    for (int i = 1; i <= j; ++i) r *= (2 * i - 1);
    return r;
}

// Parses "p/q" or a bare integer "p".  The sign may sit on either part;
// the result is stored in lowest terms with a positive denominator.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("rational_from_string: bad input '") + s + "'");
    }
}

// Always "p/q" with q > 0, including integers ("3/1").
inline std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline Rational rational_pow(const Rational& base, int k) {
    if (k < 0) {
        if (base == 0) throw std::domain_error("rational_pow: zero to a negative power");
        return rational_pow(Rational(1) / base, -k);
    }
    Rational acc = 1, sq = base;
    while (k > 0) {
        if (k & 1) acc *= sq;
        sq *= sq;
        k >>= 1;
    }
    return acc;
}

}  // namespace sympclif
