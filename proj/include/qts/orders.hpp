#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qts/classify.hpp"
#include "qts/op_table.hpp"
#include "qts/ordering.hpp"
#include "qts/signature.hpp"

namespace qts {

/// Monotonicity of F in each argument with respect to L, checked on
/// adjacent pairs of L (which is enough, by chaining).
inline bool is_order_preserving(const OpTable& f, const TotalOrdering& l) {
    if (f.n() != l.n()) throw std::invalid_argument("is_order_preserving: size mismatch");
    const int n = f.n();
    for (int i = 0; i + 1 < n; ++i) {
        const int a = l.at(i), b = l.at(i + 1);
        for (int y = 1; y <= n; ++y) {
            if (l.rank_of(f(b, y)) < l.rank_of(f(a, y))) return false;
            if (l.rank_of(f(y, b)) < l.rank_of(f(y, a))) return false;
        }
    }
    return true;
}

/// W is single-plateaued for L when every L-ascending triple a < b < c has
/// b below a, or b below c, or all three equivalent.
inline bool is_single_plateaued(const WeakOrdering& w, const TotalOrdering& l) {
    if (w.n() != l.n()) throw std::invalid_argument("is_single_plateaued: size mismatch");
    const int n = w.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int a = l.at(i), b = l.at(j), c = l.at(k);
                if (w.less(b, a) || w.less(b, c)) continue;
                if (w.equivalent(a, b) && w.equivalent(b, c)) continue;
                return false;
            }
    return true;
}

/// Every non-minimal block has at most two elements.
inline bool is_2_quasilinear(const WeakOrdering& w) {
    for (int i = 1; i < w.block_count(); ++i)
        if (w.block(i).size() > 2) return false;
    return true;
}

/// Every non-minimal block is a singleton.
inline bool is_quasilinear(const WeakOrdering& w) {
    for (int i = 1; i < w.block_count(); ++i)
        if (w.block(i).size() > 1) return false;
    return true;
}

/// A witness (a, b, c, d) with a < b ~ c ~ d when W is not 2-quasilinear.
inline std::optional<std::array<int, 4>> quasilinearity2_violation(const WeakOrdering& w) {
    for (int i = 1; i < w.block_count(); ++i) {
        const auto& blk = w.block(i);
        if (blk.size() >= 3) return std::array<int, 4>{w.block(0).front(), blk[0], blk[1], blk[2]};
    }
    return std::nullopt;
}

/// Four-step list construction of a total ordering for which a
/// 2-quasilinear weak ordering is single-plateaued. within[i] gives the
/// working order S_i on block i; steps: the S_i-least element of each block
/// from the top block down to block 2, then all of block 1 in S_1 order,
/// then the S_i-greatest element of each two-element block going back up.
inline TotalOrdering construct_order(const WeakOrdering& w, const std::vector<std::vector<int>>& within) {
    if (!is_2_quasilinear(w))
        throw std::invalid_argument("construct_order: weak ordering is not 2-quasilinear");
    const int k = w.block_count();
    if (static_cast<int>(within.size()) != k)
        throw std::invalid_argument("construct_order: one within-block order per block");
    for (int i = 0; i < k; ++i) {
        std::vector<int> sorted = within[static_cast<std::size_t>(i)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != w.block(i))
            throw std::invalid_argument("construct_order: within-block order must arrange the block");
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(w.n()));
    for (int i = k - 1; i >= 1; --i) order.push_back(within[static_cast<std::size_t>(i)].front());
    for (int x : within[0]) order.push_back(x);
    for (int i = 1; i < k; ++i)
        if (within[static_cast<std::size_t>(i)].size() == 2)
            order.push_back(within[static_cast<std::size_t>(i)].back());
    return TotalOrdering(std::move(order));
}

/// Same, with the natural order inside every block.
inline TotalOrdering construct_order(const WeakOrdering& w) {
    return construct_order(w, w.blocks());
}

struct OrderabilityReport {
    bool preservable = false;
    std::optional<TotalOrdering> witness;             // ordering for which F is preserving
    std::optional<std::array<int, 4>> violation;      // a < b ~ c ~ d otherwise
};

/// A member is order-preservable exactly when its weak ordering is
/// 2-quasilinear; the witness ordering comes from construct_order and is
/// validated before being returned.
inline OrderabilityReport order_preservability(const OpTable& f) {
    const ClassReport rep = classify(f);
    if (!rep.member)
        throw std::invalid_argument("order_preservability: operation is not associative and quasitrivial");
    const WeakOrdering& w = *rep.weak_ordering;
    if (auto viol = quasilinearity2_violation(w)) return {false, std::nullopt, viol};
    TotalOrdering witness = construct_order(w);
    if (!is_single_plateaued(w, witness) || !is_order_preserving(f, witness))
        throw std::logic_error("order_preservability: constructed witness failed validation");
    return {true, std::move(witness), std::nullopt};
}

/// Preservability read off the preimage sequence: every value strictly
/// greater than the smallest one occurs at most twice.
inline bool preimage_preservability_check(const PreimageSequence& c) {
    if (!is_realizable_preimage(c))
        throw std::invalid_argument("preimage_preservability_check: sequence is not realizable");
    const auto& v = c.counts();
    int run = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == v.front()) continue;
        run = (i > 0 && v[i] == v[i - 1]) ? run + 1 : 1;
        if (run > 2) return false;
    }
    return true;
}

}  // namespace qts
