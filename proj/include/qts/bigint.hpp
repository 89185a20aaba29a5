#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qts {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;  // product of i consecutive integers is divisible by i!
        r /= i;
    }
    return r;
}

/// n! / (parts[0]! * ... * parts[k-1]!), where the parts sum to n.
inline BigInt multinomial(int n, const std::vector<int>& parts) {
    BigInt r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

}  // namespace qts
