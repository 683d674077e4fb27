#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace biggl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// n(n-1)...(n-k+1); empty product for k = 0.
inline Int falling_factorial(long long n, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    Int f = 1;
    for (int i = 0; i < k; ++i) f *= Int(n - i);
    return f;
}

inline Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace biggl
