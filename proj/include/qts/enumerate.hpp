#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qts/bigint.hpp"
#include "qts/classify.hpp"
#include "qts/group_action.hpp"
#include "qts/op_table.hpp"
#include "qts/ordering.hpp"
#include "qts/orders.hpp"
#include "qts/signature.hpp"
#include "qts/subclass.hpp"

namespace qts {

inline constexpr int kWeakOrderingGuard = 9;
inline constexpr int kMemberGuard = 8;
inline constexpr int kQuasitrivialGuard = 4;
inline constexpr int kCensusGuard = 8;

namespace detail {

inline void check_guard(const char* who, int n, int guard) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (n > guard)
        throw GuardError(std::string(who) + ": n=" + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard));
}

}  // namespace detail

/// Visits every weak ordering of X_n exactly once, ordered by block count
/// and then lexicographically by the block-assignment word.
template <typename Visitor>
void for_each_weak_ordering(int n, Visitor&& visit, int guard = kWeakOrderingGuard) {
    detail::check_guard("weak_orderings", n, guard);
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> seen(static_cast<std::size_t>(k + 1), 0);
        int used = 0;
        auto rec = [&](auto&& self, int pos) -> void {
            if (k - used > n - pos) return;  // remaining slots cannot cover the missing blocks
            if (pos == n) {
                std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
                for (int i = 0; i < n; ++i)
                    blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)] - 1)].push_back(i + 1);
                visit(WeakOrdering(n, std::move(blocks)));
                return;
            }
            for (int v = 1; v <= k; ++v) {
                if (++seen[static_cast<std::size_t>(v)] == 1) ++used;
                assign[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1);
                if (--seen[static_cast<std::size_t>(v)] == 0) --used;
            }
        };
        rec(rec, 0);
    }
}

inline std::vector<WeakOrdering> weak_orderings(int n, int guard = kWeakOrderingGuard) {
    std::vector<WeakOrdering> out;
    for_each_weak_ordering(n, [&](WeakOrdering w) { out.push_back(std::move(w)); }, guard);
    return out;
}

/// Visits every associative quasitrivial operation on X_n exactly once:
/// for each weak ordering, every assignment of a projection to its blocks
/// of size >= 2, in binary-counter order (bit clear = first projection).
/// The visitor receives the table, its weak ordering, and the choices.
template <typename Visitor>
void for_each_member(int n, Visitor&& visit, int guard = kMemberGuard) {
    detail::check_guard("members", n, guard);
    for_each_weak_ordering(
        n,
        [&](const WeakOrdering& w) {
            std::vector<int> big;
            for (int b = 0; b < w.block_count(); ++b)
                if (w.block(b).size() >= 2) big.push_back(b);
            std::vector<BlockChoice> choices(static_cast<std::size_t>(w.block_count()),
                                             BlockChoice::singleton);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << big.size()); ++mask) {
                for (std::size_t j = 0; j < big.size(); ++j)
                    choices[static_cast<std::size_t>(big[j])] =
                        (mask >> j & 1) ? BlockChoice::proj_second : BlockChoice::proj_first;
                visit(build_ordinal_sum(w, choices), w, choices);
            }
        },
        guard);
}

inline std::vector<OpTable> members(int n, int guard = kMemberGuard) {
    std::vector<OpTable> out;
    for_each_member(
        n, [&](OpTable f, const WeakOrdering&, const std::vector<BlockChoice>&) { out.push_back(std::move(f)); },
        guard);
    return out;
}

/// Visits all 2^(n(n-1)) quasitrivial tables on X_n: the diagonal is forced
/// and each off-diagonal cell independently takes either coordinate.
template <typename Visitor>
void for_each_quasitrivial_table(int n, Visitor&& visit, int guard = kQuasitrivialGuard) {
    detail::check_guard("quasitrivial_tables", n, guard);
    std::vector<std::pair<int, int>> off;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (x != y) off.emplace_back(x, y);
    std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
        cells[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x - 1)] = x;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
        for (std::size_t b = 0; b < off.size(); ++b) {
            const auto [x, y] = off[b];
            cells[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y - 1)] =
                (mask >> b & 1) ? y : x;
        }
        visit(OpTable(n, cells));
    }
}

inline std::vector<OpTable> quasitrivial_tables(int n, int guard = kQuasitrivialGuard) {
    std::vector<OpTable> out;
    for_each_quasitrivial_table(n, [&](OpTable f) { out.push_back(std::move(f)); }, guard);
    return out;
}

struct SignatureCensus {
    Signature signature;
    BigInt orbit_count;  // distinct canonical forms with this signature
    BigInt orbit_size;   // size of each such orbit
};

struct Census {
    int n = 0;
    BigInt p, q, r, s;                    // weak orderings, members, orbits, signatures
    BigInt p_op, q_op, r_op, s_op;        // order-preservable counterparts
    BigInt q_b, r_b, s_b;                 // bisymmetric members / orbits / signatures
    BigInt commutative, anticommutative;
    BigInt quasilinear_weak_orderings;
    std::vector<SignatureCensus> signatures;  // ascending by parts
};

/// All counts by exhaustive enumeration: weak orderings for p-type counts,
/// the member stream for q-type counts (with order_preservability and
/// characterize deciding the subclasses), and deduplicated canonical forms
/// for r-type counts.
inline Census census(int n, int guard = kCensusGuard) {
    detail::check_guard("census", n, guard);
    Census c;
    c.n = n;

    std::set<Signature> sigs;
    for_each_weak_ordering(
        n,
        [&](const WeakOrdering& w) {
            c.p += 1;
            if (is_2_quasilinear(w)) c.p_op += 1;
            if (is_quasilinear(w)) c.quasilinear_weak_orderings += 1;
            sigs.insert(signature_of(w));
        },
        guard);

    std::map<Signature, std::set<OpTable>> canon_by_sig;
    for (const Signature& sig : sigs) {
        c.s += 1;
        const WeakOrdering shape = detail::interval_weak_ordering(sig);
        const bool op = is_2_quasilinear(shape), bi = is_quasilinear(shape);
        if (op) c.s_op += 1;
        if (bi) c.s_b += 1;
        std::vector<int> big;
        for (int i = 0; i < sig.size(); ++i)
            if (sig.parts()[static_cast<std::size_t>(i)] >= 2) big.push_back(i);
        std::vector<BlockChoice> choices(sig.parts().size(), BlockChoice::singleton);
        auto& forms = canon_by_sig[sig];
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << big.size()); ++mask) {
            for (std::size_t j = 0; j < big.size(); ++j)
                choices[static_cast<std::size_t>(big[j])] =
                    (mask >> j & 1) ? BlockChoice::proj_second : BlockChoice::proj_first;
            forms.insert(detail::canonical_table(sig, choices));
        }
        const BigInt orbits = static_cast<int>(forms.size());
        c.r += orbits;
        if (op) c.r_op += orbits;
        if (bi) c.r_b += orbits;
    }
    for (auto& [sig, forms] : canon_by_sig)
        c.signatures.push_back({sig, BigInt(static_cast<int>(forms.size())), orbit_stab_sizes(sig).second});

    for_each_member(
        n,
        [&](const OpTable& f, const WeakOrdering&, const std::vector<BlockChoice>&) {
            c.q += 1;
            if (order_preservability(f).preservable) c.q_op += 1;
            const SubclassReport sub = characterize(f);
            if (sub.bisymmetric) c.q_b += 1;
            if (sub.commutative) c.commutative += 1;
            if (sub.anticommutative) c.anticommutative += 1;
        },
        guard);

    return c;
}

}  // namespace qts
