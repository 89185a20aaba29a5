#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qts/bigint.hpp"

namespace qts {

// Counting sequences attached to the classification. All arithmetic is
// exact; closed forms stated with surds are evaluated through equivalent
// integer or rational recurrences, never in floating point. Values at n = 0
// follow the empty-structure convention (everything counts 1, except the
// auxiliary sequences G and Fibonacci which start at 0).

/// Number of weak orderings of X_n (Fubini numbers):
/// p(n) = sum_i C(n,i) p(n-i), p(0) = 1.
inline BigInt seq_p(int n) {
    if (n < 0) throw std::invalid_argument("seq_p: n must be >= 0");
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int i = 1; i <= m; ++i) acc += binomial(m, i) * dp[static_cast<std::size_t>(m - i)];
        dp[static_cast<std::size_t>(m)] = acc;
    }
    return dp[static_cast<std::size_t>(n)];
}

/// Number of associative quasitrivial operations on X_n: the sum over
/// compositions (n_1,...,n_k) of n of multinomial(n) times 2 for every part
/// of size >= 2, evaluated by conditioning on the last part.
inline BigInt seq_q(int n) {
    if (n < 0) throw std::invalid_argument("seq_q: n must be >= 0");
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int i = 1; i <= m; ++i)
            acc += binomial(m, i) * (i >= 2 ? 2 : 1) * dp[static_cast<std::size_t>(m - i)];
        dp[static_cast<std::size_t>(m)] = acc;
    }
    return dp[static_cast<std::size_t>(n)];
}

/// Number of orbits: r(n+2) = 2 r(n+1) + r(n), r(0) = r(1) = 1.
inline BigInt seq_r(int n) {
    if (n < 0) throw std::invalid_argument("seq_r: n must be >= 0");
    BigInt a = 1, b = 1;  // r(0), r(1)
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        BigInt next = 2 * b + a;
        a = b;
        b = next;
    }
    return b;
}

/// The same sequence through the binomial sum: r(n) = sum_k C(n,2k) 2^k.
inline BigInt seq_r_closed(int n) {
    if (n < 0) throw std::invalid_argument("seq_r_closed: n must be >= 0");
    BigInt acc = 0, pow2 = 1;
    for (int k = 0; 2 * k <= n; ++k) {
        acc += binomial(n, 2 * k) * pow2;
        pow2 *= 2;
    }
    return acc;
}

/// Number of signatures: s(n) = 2^(n-1) for n >= 1, s(0) = 1.
inline BigInt seq_s(int n) {
    if (n < 0) throw std::invalid_argument("seq_s: n must be >= 0");
    if (n == 0) return 1;
    return BigInt(1) << (n - 1);
}

inline BigInt fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: n must be >= 0");
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = b;
        b = next;
    }
    return a;
}

/// G_0 = 0, G_1 = 1, G_{n+2} = G_{n+1} + G_n / 2. The usual closed form has
/// roots (1 +- sqrt(3)) / 2 of x^2 = x + 1/2, so this rational recurrence
/// reproduces it exactly.
inline BigRat seq_g(int n) {
    if (n < 0) throw std::invalid_argument("seq_g: n must be >= 0");
    BigRat a = 0, b = 1;
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        BigRat next = b + a / 2;
        a = b;
        b = next;
    }
    return b;
}

/// Number of 2-quasilinear weak orderings:
/// p_op(m) = 1 + m p_op(m-1) + m(m-1)/2 p_op(m-2) for m >= 3,
/// with p_op(0) = p_op(1) = 1 and p_op(2) = 3.
inline BigInt seq_p_op(int n) {
    if (n < 0) throw std::invalid_argument("seq_p_op: n must be >= 0");
    const BigInt seed[3] = {1, 1, 3};
    if (n <= 2) return seed[n];
    BigInt a = 1, b = 3;  // p_op(1), p_op(2)
    for (int m = 3; m <= n; ++m) {
        BigInt next = 1 + m * b + BigInt(m) * (m - 1) / 2 * a;
        a = b;
        b = next;
    }
    return b;
}

/// The same sequence through the closed form
/// p_op(n) = sum_{k=0}^{n} n!/(n+1-k)! G_k, valid for n >= 1.
inline BigInt seq_p_op_closed(int n) {
    if (n < 1) throw std::invalid_argument("seq_p_op_closed: n must be >= 1");
    BigRat acc = 0;
    const BigInt nfac = factorial(n);
    for (int k = 0; k <= n; ++k) acc += BigRat(nfac, factorial(n + 1 - k)) * seq_g(k);
    if (denominator(acc) != 1) throw std::logic_error("seq_p_op_closed: sum is not integral");
    return numerator(acc);
}

/// Number of order-preservable operations:
/// q_op(m) = 2 + m q_op(m-1) + m(m-1) q_op(m-2) for m >= 3,
/// with q_op(0) = q_op(1) = 1 and q_op(2) = 4.
inline BigInt seq_q_op(int n) {
    if (n < 0) throw std::invalid_argument("seq_q_op: n must be >= 0");
    const BigInt seed[3] = {1, 1, 4};
    if (n <= 2) return seed[n];
    BigInt a = 1, b = 4;  // q_op(1), q_op(2)
    for (int m = 3; m <= n; ++m) {
        BigInt next = 2 + m * b + BigInt(m) * (m - 1) * a;
        a = b;
        b = next;
    }
    return b;
}

/// The same sequence through the Fibonacci closed form
/// q_op(n) = n! F_n + 2 sum_{k=0}^{n-1} n!/(n+1-k)! F_k, valid for n >= 1.
inline BigInt seq_q_op_closed(int n) {
    if (n < 1) throw std::invalid_argument("seq_q_op_closed: n must be >= 1");
    const BigInt nfac = factorial(n);
    BigRat acc = BigRat(nfac * fibonacci(n));
    for (int k = 0; k <= n - 1; ++k) acc += 2 * BigRat(nfac, factorial(n + 1 - k)) * fibonacci(k);
    if (denominator(acc) != 1) throw std::logic_error("seq_q_op_closed: sum is not integral");
    return numerator(acc);
}

/// Number of order-preservable orbits: r_op(n) = 2^n - 1 for n >= 1, 1 at 0.
inline BigInt seq_r_op(int n) {
    if (n < 0) throw std::invalid_argument("seq_r_op: n must be >= 0");
    if (n == 0) return 1;
    return (BigInt(1) << n) - 1;
}

/// Number of order-preservable signatures: s_op(n) = F_{n+2} - 1 for n >= 1.
inline BigInt seq_s_op(int n) {
    if (n < 0) throw std::invalid_argument("seq_s_op: n must be >= 0");
    if (n == 0) return 1;
    return fibonacci(n + 2) - 1;
}

/// Number of bisymmetric orbits: r_b(n) = 2n - 1 for n >= 1, 1 at 0.
inline BigInt seq_r_b(int n) {
    if (n < 0) throw std::invalid_argument("seq_r_b: n must be >= 0");
    if (n == 0) return 1;
    return 2 * BigInt(n) - 1;
}

/// Number of bisymmetric signatures: s_b(n) = n for n >= 1, 1 at 0.
inline BigInt seq_s_b(int n) {
    if (n < 0) throw std::invalid_argument("seq_s_b: n must be >= 0");
    if (n == 0) return 1;
    return n;
}

enum class SequenceFamily { p, q, r, s, p_op, q_op, r_op, s_op, r_b, s_b, fibonacci, g };

inline const char* sequence_name(SequenceFamily f) {
    switch (f) {
        case SequenceFamily::p: return "p";
        case SequenceFamily::q: return "q";
        case SequenceFamily::r: return "r";
        case SequenceFamily::s: return "s";
        case SequenceFamily::p_op: return "p_op";
        case SequenceFamily::q_op: return "q_op";
        case SequenceFamily::r_op: return "r_op";
        case SequenceFamily::s_op: return "s_op";
        case SequenceFamily::r_b: return "r_b";
        case SequenceFamily::s_b: return "s_b";
        case SequenceFamily::fibonacci: return "fibonacci";
        case SequenceFamily::g: return "G";
    }
    return "?";
}

inline BigRat sequence_value(SequenceFamily f, int n) {
    switch (f) {
        case SequenceFamily::p: return BigRat(seq_p(n));
        case SequenceFamily::q: return BigRat(seq_q(n));
        case SequenceFamily::r: return BigRat(seq_r(n));
        case SequenceFamily::s: return BigRat(seq_s(n));
        case SequenceFamily::p_op: return BigRat(seq_p_op(n));
        case SequenceFamily::q_op: return BigRat(seq_q_op(n));
        case SequenceFamily::r_op: return BigRat(seq_r_op(n));
        case SequenceFamily::s_op: return BigRat(seq_s_op(n));
        case SequenceFamily::r_b: return BigRat(seq_r_b(n));
        case SequenceFamily::s_b: return BigRat(seq_s_b(n));
        case SequenceFamily::fibonacci: return BigRat(fibonacci(n));
        case SequenceFamily::g: return seq_g(n);
    }
    throw std::invalid_argument("sequence_value: unknown family");
}

struct SequenceTable {
    std::string name;
    std::vector<BigRat> values;  // indexed from 0
};

inline SequenceTable sequence_table(SequenceFamily f, int upto) {
    if (upto < 0) throw std::invalid_argument("sequence_table: upto must be >= 0");
    SequenceTable t;
    t.name = sequence_name(f);
    t.values.reserve(static_cast<std::size_t>(upto) + 1);
    for (int n = 0; n <= upto; ++n) t.values.push_back(sequence_value(f, n));
    return t;
}

}  // namespace qts
