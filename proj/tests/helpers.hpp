#pragma once

#include <optional>
#include <random>
#include <vector>

#include "qts/classify.hpp"
#include "qts/enumerate.hpp"
#include "qts/op_table.hpp"
#include "qts/ordering.hpp"
#include "qts/permutation.hpp"

namespace qtest {

/// The X_6 member with blocks {3,4} < {2} < {1,5,6}, second projection on
/// the bottom block, first projection on the top block.
inline qts::OpTable x6_example() {
    qts::WeakOrdering w(6, {{3, 4}, {2}, {1, 5, 6}});
    return qts::build_ordinal_sum(
        w, {qts::BlockChoice::proj_second, qts::BlockChoice::singleton, qts::BlockChoice::proj_first});
}

/// First quasitrivial non-associative table on X_3, by exhaustive search.
inline qts::OpTable nonassoc_quasitrivial_x3() {
    std::optional<qts::OpTable> found;
    qts::for_each_quasitrivial_table(3, [&](const qts::OpTable& f) {
        if (!found && !qts::is_associative(f)) found = f;
    });
    return *found;
}

/// A quasitrivial non-associative table on X_3 whose preimage sequence is
/// (3,3,3), hence passes the realizability condition.
inline qts::OpTable nonassoc_preimage_333() {
    std::optional<qts::OpTable> found;
    qts::for_each_quasitrivial_table(3, [&](const qts::OpTable& f) {
        if (found || qts::is_associative(f)) return;
        if (qts::preimage_sequence(f).counts() == std::vector<int>{3, 3, 3}) found = f;
    });
    return *found;
}

inline qts::OpTable random_table(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> val(1, n);
    std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int& c : cells) c = val(rng);
    return qts::OpTable(n, std::move(cells));
}

inline qts::Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::shuffle(im.begin(), im.end(), rng);
    return qts::Permutation(std::move(im));
}

}  // namespace qtest
