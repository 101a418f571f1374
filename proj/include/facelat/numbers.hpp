// Exact arithmetic typedefs and binomial coefficients. All counting in this
// library is integer-exact; no floating point is used anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace facelat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: r is C(n, i+1) * (i+1) before the division
    }
    return r;
}

}  // namespace facelat
