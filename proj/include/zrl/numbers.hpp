#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace zrl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Euler phi by trial division; conductors here are tiny.
inline int euler_phi(int m) {
    int result = m;
    int n = m;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::string rat_to_string(const Rat& r) { return r.str(); }

Rat rat_from_string(const std::string& s);

} // namespace zrl
