#include <random>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qts/enumerate.hpp"
#include "qts/group_action.hpp"
#include "qts/op_table.hpp"
#include "qts/ordering.hpp"
#include "qts/permutation.hpp"
#include "qts/signature.hpp"

using namespace qts;

TEST_CASE("constructors reject malformed values", "[core]") {
    REQUIRE_THROWS_AS(OpTable(0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(OpTable(2, {1, 1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(OpTable(2, {1, 1, 1, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(OpTable(2, {0, 1, 1, 2}), std::invalid_argument);

    REQUIRE_THROWS_AS(WeakOrdering(0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(WeakOrdering(3, {{1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(WeakOrdering(3, {{1, 2}, {}, {3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(WeakOrdering(3, {{1, 2}, {2, 3}}), std::invalid_argument);

    REQUIRE_THROWS_AS(TotalOrdering({1, 1, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(TotalOrdering(std::vector<int>{}), std::invalid_argument);

    REQUIRE_THROWS_AS(Signature({2, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(Signature(std::vector<int>{}), std::invalid_argument);

    REQUIRE_THROWS_AS(PreimageSequence({3, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(PreimageSequence({-1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(PreimageSequence(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("preimage counts", "[core]") {
    REQUIRE(preimage_counts(max_table(TotalOrdering::natural(3))) == std::vector<int>{1, 3, 5});
    REQUIRE(preimage_counts(projection_first(3)) == std::vector<int>{3, 3, 3});
    REQUIRE(preimage_counts(OpTable(1, {1})) == std::vector<int>{1});
}

TEST_CASE("preimage sequence", "[core]") {
    REQUIRE(preimage_sequence(max_table(TotalOrdering::natural(3))).counts() == std::vector<int>{1, 3, 5});
    REQUIRE(preimage_sequence(projection_second(4)).counts() == std::vector<int>{4, 4, 4, 4});
    // block sizes (2,1,3) contribute (2,2, 5, 9,9,9); double-checked by
    // counting cells of the built table.
    const OpTable f = qtest::x6_example();
    REQUIRE(preimage_sequence(f).counts() == std::vector<int>{2, 2, 5, 9, 9, 9});
    std::vector<int> direct(6, 0);
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) ++direct[static_cast<std::size_t>(f(x, y) - 1)];
    REQUIRE(direct == preimage_counts(f));
}

TEST_CASE("preimage counts sum to n^2", "[core]") {
    std::mt19937 rng(20240811);
    for (int n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const OpTable f = qtest::random_table(rng, n);
            int total = 0;
            for (int c : preimage_counts(f)) total += c;
            REQUIRE(total == n * n);
        }
}

TEST_CASE("signature of weak orderings", "[core]") {
    REQUIRE(signature_of(WeakOrdering(6, {{3, 4}, {2}, {1, 5, 6}})).parts() == std::vector<int>{2, 1, 3});
    REQUIRE(signature_of(WeakOrdering::single_block(3)).parts() == std::vector<int>{3});
    REQUIRE(signature_of(WeakOrdering(3, {{1}, {2}, {3}})).parts() == std::vector<int>{1, 1, 1});
}

TEST_CASE("signature parts sum to n", "[core]") {
    for (int n = 1; n <= 5; ++n)
        for_each_weak_ordering(n, [&](const WeakOrdering& w) { REQUIRE(signature_of(w).sum() == n); });
}

TEST_CASE("permutation group operations", "[core]") {
    const Permutation sigma({2, 3, 1});
    REQUIRE(sigma(1) == 2);
    REQUIRE(sigma.compose(sigma.inverse()) == Permutation::identity(3));
    REQUIRE(sigma.inverse().compose(sigma) == Permutation::identity(3));
    REQUIRE_THROWS_AS(sigma.compose(Permutation::identity(4)), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("weak ordering comparisons", "[core]") {
    const WeakOrdering w(6, {{3, 4}, {2}, {1, 5, 6}});
    REQUIRE(w.compare(3, 4) == Rel::equivalent);
    REQUIRE(w.compare(2, 5) == Rel::less);
    REQUIRE(w.compare(5, 2) == Rel::greater);
    REQUIRE(w.compare(1, 1) == Rel::equivalent);
    REQUIRE(w.leq(3, 2));
    REQUIRE_FALSE(w.less(5, 6));
}

TEST_CASE("weak ordering storage is canonical", "[core]") {
    REQUIRE(WeakOrdering(3, {{2, 1}, {3}}) == WeakOrdering(3, {{1, 2}, {3}}));
    REQUIRE(WeakOrdering(3, {{1, 2}, {3}}) != WeakOrdering(3, {{3}, {1, 2}}));
}

TEST_CASE("total ordering basics", "[core]") {
    const TotalOrdering l({3, 1, 2});
    REQUIRE(l.at(0) == 3);
    REQUIRE(l.rank_of(2) == 2);
    REQUIRE(l.leq(3, 1));
    REQUIRE(l.compare(1, 2) == Rel::less);
    REQUIRE(l.compare(2, 2) == Rel::equivalent);
    REQUIRE(TotalOrdering::natural(4).order() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("preimage sequence is conjugation invariant", "[core]") {
    // exhaustive over quasitrivial tables and permutations, n <= 4
    for (int n = 2; n <= 4; ++n)
        for_each_quasitrivial_table(n, [&](const OpTable& f) {
            for_each_permutation(n, [&](const Permutation& sigma) {
                if (preimage_sequence(conjugate(f, sigma)) != preimage_sequence(f))
                    FAIL("invariance broken at n=" << n);
            });
        });
    // random tables and permutations up to n = 7
    std::mt19937 rng(7);
    for (int n = 2; n <= 7; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const OpTable f = qtest::random_table(rng, n);
            const Permutation sigma = qtest::random_permutation(rng, n);
            REQUIRE(preimage_sequence(conjugate(f, sigma)) == preimage_sequence(f));
        }
}
