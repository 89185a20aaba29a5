#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qts/classify.hpp"
#include "qts/op_table.hpp"
#include "qts/ordering.hpp"

namespace qts {

inline bool is_commutative(const OpTable& f) {
    for (int x = 1; x <= f.n(); ++x)
        for (int y = x + 1; y <= f.n(); ++y)
            if (f(x, y) != f(y, x)) return false;
    return true;
}

inline bool is_anticommutative(const OpTable& f) {
    for (int x = 1; x <= f.n(); ++x)
        for (int y = x + 1; y <= f.n(); ++y)
            if (f(x, y) == f(y, x)) return false;
    return true;
}

/// F(F(x,y), F(u,v)) = F(F(x,u), F(y,v)) over all quadruples, O(n^4).
inline bool is_bisymmetric(const OpTable& f) {
    const int n = f.n();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v)
                    if (f(f(x, y), f(u, v)) != f(f(x, u), f(y, v))) return false;
    return true;
}

struct SubclassReport {
    bool commutative = false;
    bool anticommutative = false;
    bool bisymmetric = false;
    std::optional<TotalOrdering> commutative_witness;  // ordering with F = max for it
    std::optional<int> bisymmetric_ell;                // size of the minimal block
};

/// Structural subclass flags for a member, read off its signature:
/// commutative means all blocks are singletons (F is the max of a total
/// ordering), anticommutative means a single block (F is a projection),
/// bisymmetric means only the minimal block may exceed one element.
inline SubclassReport characterize(const OpTable& f) {
    const ClassReport rep = classify(f);
    if (!rep.member)
        throw std::invalid_argument("characterize: operation is not associative and quasitrivial");
    const auto& parts = rep.signature->parts();

    SubclassReport out;
    out.commutative = true;
    for (int p : parts) out.commutative &= (p == 1);
    out.anticommutative = parts.size() == 1;
    out.bisymmetric = true;
    for (std::size_t i = 1; i < parts.size(); ++i) out.bisymmetric &= (parts[i] == 1);
    if (out.commutative) out.commutative_witness = lexicographic_extension(*rep.weak_ordering);
    if (out.bisymmetric) out.bisymmetric_ell = parts.front();

#ifndef NDEBUG
    if (f.n() <= 16) {
        assert(out.commutative == is_commutative(f));
        assert(out.anticommutative == is_anticommutative(f));
        assert(out.bisymmetric == is_bisymmetric(f));
        if (out.commutative_witness) assert(f == max_table(*out.commutative_witness));
    }
#endif
    return out;
}

}  // namespace qts
