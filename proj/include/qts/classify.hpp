#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qts/op_table.hpp"
#include "qts/ordering.hpp"
#include "qts/signature.hpp"

namespace qts {

enum class BlockChoice { proj_first, proj_second, singleton };

/// Normal form of a member of F_n: a total ordering, a partition of its
/// positions into consecutive blocks, and a projection choice per block.
/// Inside each block the operation is the chosen projection; across blocks
/// it is the maximum for the ordering.
class OrdinalSumDecomposition {
public:
    OrdinalSumDecomposition(TotalOrdering order, std::vector<int> block_sizes,
                            std::vector<BlockChoice> choices)
        : order_(std::move(order)), block_sizes_(std::move(block_sizes)), choices_(std::move(choices)) {
        if (block_sizes_.size() != choices_.size())
            throw std::invalid_argument("OrdinalSumDecomposition: one choice per block");
        int total = 0;
        for (std::size_t i = 0; i < block_sizes_.size(); ++i) {
            const int sz = block_sizes_[i];
            if (sz < 1) throw std::invalid_argument("OrdinalSumDecomposition: empty block");
            if ((sz == 1) != (choices_[i] == BlockChoice::singleton))
                throw std::invalid_argument("OrdinalSumDecomposition: singleton choice iff block size 1");
            total += sz;
        }
        if (total != order_.n())
            throw std::invalid_argument("OrdinalSumDecomposition: blocks must partition X_n");
    }

    const TotalOrdering& order() const { return order_; }
    int block_count() const { return static_cast<int>(block_sizes_.size()); }
    const std::vector<int>& block_sizes() const { return block_sizes_; }
    const std::vector<BlockChoice>& choices() const { return choices_; }

    /// Elements of each block, listed in order positions.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out;
        out.reserve(block_sizes_.size());
        int pos = 0;
        for (int sz : block_sizes_) {
            std::vector<int> blk;
            blk.reserve(static_cast<std::size_t>(sz));
            for (int i = 0; i < sz; ++i) blk.push_back(order_.at(pos++));
            out.push_back(std::move(blk));
        }
        return out;
    }

private:
    TotalOrdering order_;
    std::vector<int> block_sizes_;
    std::vector<BlockChoice> choices_;
};

struct ClassReport {
    bool quasitrivial = false;
    bool associative = false;
    bool member = false;  // quasitrivial and associative
    std::optional<WeakOrdering> weak_ordering;
    std::optional<Signature> signature;
    std::optional<OrdinalSumDecomposition> decomposition;
};

inline bool is_quasitrivial(const OpTable& f) {
    for (int x = 1; x <= f.n(); ++x)
        for (int y = 1; y <= f.n(); ++y) {
            const int v = f(x, y);
            if (v != x && v != y) return false;
        }
    return true;
}

/// Definition check over all triples. This is the O(n^3) oracle that the
/// fast membership test is validated against.
inline bool is_associative(const OpTable& f) {
    const int n = f.n();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                if (f(f(x, y), z) != f(x, f(y, z))) return false;
    return true;
}

/// The weak ordering grouping elements by preimage count, smallest first.
/// For members this is the canonical weak ordering attached to F.
inline WeakOrdering weak_ordering_from_counts(const OpTable& f) {
    const auto counts = preimage_counts(f);
    std::vector<int> elems(static_cast<std::size_t>(f.n()));
    for (int x = 1; x <= f.n(); ++x) elems[static_cast<std::size_t>(x - 1)] = x;
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        const int ca = counts[static_cast<std::size_t>(a - 1)], cb = counts[static_cast<std::size_t>(b - 1)];
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<std::vector<int>> blocks;
    for (int x : elems) {
        if (blocks.empty() ||
            counts[static_cast<std::size_t>(x - 1)] != counts[static_cast<std::size_t>(blocks.back().front() - 1)])
            blocks.emplace_back();
        blocks.back().push_back(x);
    }
    return WeakOrdering(f.n(), std::move(blocks));
}

/// The weak ordering defined pairwise by "F(x,y) = y or F(y,x) = y".
/// Returns nothing when that relation is not total or not transitive,
/// which can happen only for non-members.
inline std::optional<WeakOrdering> weak_ordering_from_relation(const OpTable& f) {
    const int n = f.n();
    std::vector<char> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto rel = [&](int x, int y) -> char& {
        return leq[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y - 1)];
    };
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) rel(x, y) = (f(x, y) == y || f(y, x) == y) ? 1 : 0;

    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (!rel(x, y) && !rel(y, x)) return std::nullopt;  // totality (x == y included)
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (!rel(x, y)) continue;
            for (int z = 1; z <= n; ++z)
                if (rel(y, z) && !rel(x, z)) return std::nullopt;  // transitivity
        }

    // Weak ordering confirmed; elements with more predecessors sit higher.
    std::vector<int> score(static_cast<std::size_t>(n), 0);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (rel(y, x)) ++score[static_cast<std::size_t>(x - 1)];
    std::vector<int> elems(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) elems[static_cast<std::size_t>(x - 1)] = x;
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        const int sa = score[static_cast<std::size_t>(a - 1)], sb = score[static_cast<std::size_t>(b - 1)];
        return sa != sb ? sa < sb : a < b;
    });
    std::vector<std::vector<int>> blocks;
    for (int x : elems) {
        if (blocks.empty() ||
            score[static_cast<std::size_t>(x - 1)] != score[static_cast<std::size_t>(blocks.back().front() - 1)])
            blocks.emplace_back();
        blocks.back().push_back(x);
    }
    return WeakOrdering(n, std::move(blocks));
}

/// Greedy scan for an ordinal-sum structure of F along L: walk L from the
/// least element, extend the current block while its cells stay a consistent
/// projection, and close it once every cell towards later elements obeys the
/// max rule. The block partition is unique when it exists, so the scan never
/// needs to backtrack.
inline std::optional<OrdinalSumDecomposition> ordinal_sum_on(const OpTable& f, const TotalOrdering& l) {
    if (f.n() != l.n()) throw std::invalid_argument("ordinal_sum_on: size mismatch");
    const int n = f.n();
    auto elem = [&](int pos) { return l.at(pos); };

    // bad_after[i]: last position j > i whose pair with i violates the
    // cross-block max rule; i when none does.
    std::vector<int> bad_after(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bad_after[static_cast<std::size_t>(i)] = i;
        for (int j = i + 1; j < n; ++j) {
            const int a = elem(i), b = elem(j);
            if (f(a, b) != b || f(b, a) != b) bad_after[static_cast<std::size_t>(i)] = j;
        }
    }

    std::vector<int> sizes;
    std::vector<BlockChoice> choices;
    int s = 0;
    while (s < n) {
        bool p1 = true, p2 = true;
        int worst = bad_after[static_cast<std::size_t>(s)];
        if (f(elem(s), elem(s)) != elem(s)) return std::nullopt;
        int t = s;
        while (true) {
            if ((p1 || p2) && worst <= t) {
                const int sz = t - s + 1;
                sizes.push_back(sz);
                choices.push_back(sz == 1 ? BlockChoice::singleton
                                          : (p1 ? BlockChoice::proj_first : BlockChoice::proj_second));
                break;
            }
            if (++t == n) return std::nullopt;
            const int e = elem(t);
            if (f(e, e) != e) return std::nullopt;
            for (int u = s; u < t; ++u) {
                const int b = elem(u);
                if (f(b, e) != b || f(e, b) != e) p1 = false;
                if (f(b, e) != e || f(e, b) != b) p2 = false;
            }
            worst = std::max(worst, bad_after[static_cast<std::size_t>(t)]);
        }
        s = t + 1;
    }
    return OrdinalSumDecomposition(l, std::move(sizes), std::move(choices));
}

inline bool is_ordinal_sum_on(const OpTable& f, const TotalOrdering& l) {
    return ordinal_sum_on(f, l).has_value();
}

/// Membership test: quasitriviality, then the preimage-count weak ordering,
/// then the ordinal-sum check along its lexicographic extension. Runs in
/// O(n^2) once the table is in hand.
inline ClassReport classify(const OpTable& f) {
    ClassReport rep;
    rep.quasitrivial = is_quasitrivial(f);
    if (!rep.quasitrivial) {
        rep.associative = is_associative(f);
        return rep;
    }
    WeakOrdering w = weak_ordering_from_counts(f);
    auto dec = ordinal_sum_on(f, lexicographic_extension(w));
    rep.member = dec.has_value();
    rep.associative = rep.member;  // for quasitrivial operations the two coincide
    if (rep.member) {
        rep.signature = signature_of(w);
        rep.weak_ordering = std::move(w);
        rep.decomposition = std::move(dec);
    }
#ifndef NDEBUG
    if (f.n() <= 32) assert(rep.associative == is_associative(f));
#endif
    return rep;
}

/// Builds the member determined by a weak ordering and per-block projection
/// choices: the chosen projection inside each block, max across blocks.
inline OpTable build_ordinal_sum(const WeakOrdering& w, const std::vector<BlockChoice>& choices) {
    if (static_cast<int>(choices.size()) != w.block_count())
        throw std::invalid_argument("build_ordinal_sum: one choice per block");
    for (int i = 0; i < w.block_count(); ++i)
        if ((w.block(i).size() == 1) != (choices[static_cast<std::size_t>(i)] == BlockChoice::singleton))
            throw std::invalid_argument("build_ordinal_sum: singleton choice iff block size 1");
    return OpTable::from_function(w.n(), [&](int x, int y) {
        const int bx = w.block_index(x), by = w.block_index(y);
        if (bx == by) return choices[static_cast<std::size_t>(bx)] == BlockChoice::proj_second ? y : x;
        return bx > by ? x : y;
    });
}

namespace detail {

/// The weak ordering whose blocks are consecutive intervals of 1..n with the
/// given sizes.
inline WeakOrdering interval_weak_ordering(const Signature& sig) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(sig.parts().size());
    int next = 1;
    for (int sz : sig.parts()) {
        std::vector<int> blk;
        blk.reserve(static_cast<std::size_t>(sz));
        for (int i = 0; i < sz; ++i) blk.push_back(next++);
        blocks.push_back(std::move(blk));
    }
    return WeakOrdering(sig.sum(), std::move(blocks));
}

inline OpTable canonical_table(const Signature& sig, const std::vector<BlockChoice>& choices) {
    return build_ordinal_sum(interval_weak_ordering(sig), choices);
}

}  // namespace detail

/// Preimage sequence of any member with the given signature: block i
/// contributes n_i copies of 2*(n_1+...+n_{i-1}) + n_i.
inline PreimageSequence preimage_from_signature(const Signature& sig) {
    std::vector<int> counts;
    counts.reserve(static_cast<std::size_t>(sig.sum()));
    int below = 0;
    for (int sz : sig.parts()) {
        for (int i = 0; i < sz; ++i) counts.push_back(2 * below + sz);
        below += sz;
    }
    return PreimageSequence(std::move(counts));
}

/// A nondecreasing sequence is the preimage sequence of a member iff every
/// entry equals first + last - 1 over the run of equal entries it lies in.
inline bool is_realizable_preimage(const PreimageSequence& c) {
    const auto& v = c.counts();
    const int n = c.n();
    int lo = 0;
    while (lo < n) {
        int hi = lo;
        while (hi + 1 < n && v[static_cast<std::size_t>(hi + 1)] == v[static_cast<std::size_t>(lo)]) ++hi;
        if (v[static_cast<std::size_t>(lo)] != (lo + 1) + (hi + 1) - 1) return false;
        lo = hi + 1;
    }
    return true;
}

/// Run lengths of the distinct values of a realizable preimage sequence.
inline Signature signature_from_preimage(const PreimageSequence& c) {
    if (!is_realizable_preimage(c))
        throw std::invalid_argument("signature_from_preimage: sequence is not realizable");
    std::vector<int> parts;
    const auto& v = c.counts();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0 || v[i] != v[i - 1]) parts.push_back(0);
        ++parts.back();
    }
    return Signature(std::move(parts));
}

namespace detail {

inline OpTable realize_rec(std::span<const int> c) {
    const int n = static_cast<int>(c.size());
    if (c.front() == c.back()) return projection_first(n);
    int ell = n - 1;
    while (c[static_cast<std::size_t>(ell - 1)] == c.back()) --ell;
    const OpTable sub = realize_rec(c.first(static_cast<std::size_t>(ell)));
    return OpTable::from_function(n, [&](int x, int y) {
        if (x <= ell && y <= ell) return sub(x, y);
        if (x > ell && y > ell) return x;  // first projection on the top block
        return std::max(x, y);
    });
}

}  // namespace detail

/// A member realizing a given realizable preimage sequence, built by
/// restricting to the positions below the top run and gluing the first
/// projection on top with max across.
inline OpTable realize_preimage(const PreimageSequence& c) {
    if (!is_realizable_preimage(c))
        throw std::invalid_argument("realize_preimage: sequence is not realizable");
    return detail::realize_rec(std::span<const int>(c.counts()));
}

/// Contour plots are isomorphic exactly when the preimage sequences agree:
/// each side is a disjoint union of complete graphs whose orders are the
/// preimage counts.
inline bool contour_isomorphic(const OpTable& f, const OpTable& g) {
    if (f.n() != g.n()) throw std::invalid_argument("contour_isomorphic: size mismatch");
    return preimage_sequence(f) == preimage_sequence(g);
}

}  // namespace qts
