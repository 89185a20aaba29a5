#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qts/bigint.hpp"
#include "qts/classify.hpp"
#include "qts/op_table.hpp"
#include "qts/permutation.hpp"
#include "qts/signature.hpp"

namespace qts {

class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// F_sigma(x, y) = sigma(F(sigma^-1(x), sigma^-1(y))).
inline OpTable conjugate(const OpTable& f, const Permutation& sigma) {
    if (f.n() != sigma.n()) throw std::invalid_argument("conjugate: size mismatch");
    const Permutation inv = sigma.inverse();
    return OpTable::from_function(f.n(), [&](int x, int y) { return sigma(f(inv(x), inv(y))); });
}

namespace detail {

inline void require_member(const OpTable& f, const char* who) {
    if (!classify(f).member)
        throw std::invalid_argument(std::string(who) + ": operation is not associative and quasitrivial");
}

}  // namespace detail

inline constexpr int kOrbitGuard = 8;

/// All distinct conjugates of a member, in table order. Enumerates n!
/// permutations, so n is guarded.
inline std::vector<OpTable> orbit(const OpTable& f, int guard = kOrbitGuard) {
    if (f.n() > guard)
        throw GuardError("orbit: n=" + std::to_string(f.n()) + " exceeds guard " + std::to_string(guard) +
                         " (n! permutations would be enumerated)");
    detail::require_member(f, "orbit");
    std::set<OpTable> out;
    for_each_permutation(f.n(), [&](const Permutation& sigma) { out.insert(conjugate(f, sigma)); });
    return {out.begin(), out.end()};
}

/// The permutations fixing a member under conjugation: exactly those that
/// permute each block of its weak ordering within itself.
inline std::vector<Permutation> stabilizer(const OpTable& f, int guard = kOrbitGuard) {
    if (f.n() > guard)
        throw GuardError("stabilizer: n=" + std::to_string(f.n()) + " exceeds guard " + std::to_string(guard));
    detail::require_member(f, "stabilizer");
    const WeakOrdering w = weak_ordering_from_counts(f);

    std::vector<Permutation> out;
    std::vector<int> images(static_cast<std::size_t>(f.n()));
    std::vector<std::vector<int>> arranged;
    for (const auto& blk : w.blocks()) arranged.push_back(blk);

    auto emit = [&]() {
        for (std::size_t b = 0; b < arranged.size(); ++b) {
            const auto& src = w.block(static_cast<int>(b));
            for (std::size_t i = 0; i < src.size(); ++i)
                images[static_cast<std::size_t>(src[i] - 1)] = arranged[b][i];
        }
        out.emplace_back(images);
    };
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == arranged.size()) {
            emit();
            return;
        }
        auto& blk = arranged[b];
        std::sort(blk.begin(), blk.end());
        do {
            self(self, b + 1);
        } while (std::next_permutation(blk.begin(), blk.end()));
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// (stabilizer size, orbit size) for any member with this signature:
/// the product of the part factorials and the multinomial coefficient.
inline std::pair<BigInt, BigInt> orbit_stab_sizes(const Signature& sig) {
    BigInt stab = 1;
    for (int p : sig.parts()) stab *= factorial(p);
    return {stab, multinomial(sig.sum(), sig.parts())};
}

struct CanonicalForm {
    Permutation sigma;  // lexicographically least permutation reaching the form
    OpTable table;      // the unique ordinal sum on 1 < 2 < ... < n in the orbit
};

/// Transports the blocks of the weak ordering onto consecutive intervals of
/// the natural ordering, keeping each block's projection choice. The
/// resulting table is the same for every member of the orbit; the returned
/// permutation is unique only up to the stabilizer, and the least one in
/// one-line notation is chosen.
inline CanonicalForm canonicalize(const OpTable& f) {
    const ClassReport rep = classify(f);
    if (!rep.member) throw std::invalid_argument("canonicalize: operation is not associative and quasitrivial");
    OpTable canon = detail::canonical_table(*rep.signature, rep.decomposition->choices());
    std::vector<int> images(static_cast<std::size_t>(f.n()));
    int next = 1;
    for (const auto& blk : rep.weak_ordering->blocks())
        for (int x : blk) images[static_cast<std::size_t>(x - 1)] = next++;
    return {Permutation(std::move(images)), std::move(canon)};
}

enum class Relation { q, p, r, s };

/// q: equal tables. p: equal weak orderings. r: same orbit (equal canonical
/// forms). s: isomorphic weak orderings (equal signatures).
inline bool related(const OpTable& f, const OpTable& g, Relation rel) {
    if (f.n() != g.n()) throw std::invalid_argument("related: size mismatch");
    const ClassReport rf = classify(f), rg = classify(g);
    if (!rf.member || !rg.member)
        throw std::invalid_argument("related: operations must be associative and quasitrivial");
    switch (rel) {
        case Relation::q: return f == g;
        case Relation::p: return *rf.weak_ordering == *rg.weak_ordering;
        case Relation::r: return canonicalize(f).table == canonicalize(g).table;
        case Relation::s: return *rf.signature == *rg.signature;
    }
    throw std::invalid_argument("related: unknown relation");
}

struct OrbitSummary {
    OpTable representative;  // canonical form
    BigInt orbit_size;
    BigInt stabilizer_size;
    Signature signature;
};

inline OrbitSummary orbit_summary(const OpTable& f) {
    CanonicalForm cf = canonicalize(f);
    const Signature sig = *classify(f).signature;
    auto [stab, orb] = orbit_stab_sizes(sig);
    return {std::move(cf.table), std::move(orb), std::move(stab), sig};
}

}  // namespace qts
