#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qts/classify.hpp"
#include "qts/enumerate.hpp"
#include "qts/ordering.hpp"
#include "qts/sequences.hpp"
#include "series.hpp"

using namespace qts;
using qtest::series_quotient;

namespace {

BigRat inv_factorial(int n) { return BigRat(1, factorial(n)); }

}  // namespace

TEST_CASE("table of first values", "[sequences]") {
    const std::vector<BigInt> p = {1, 1, 3, 13, 75, 541, 4683};
    const std::vector<BigInt> q = {1, 1, 4, 20, 138, 1182, 12166};
    const std::vector<BigInt> r = {1, 1, 3, 7, 17, 41, 99};
    const std::vector<BigInt> s = {1, 1, 2, 4, 8, 16, 32};
    const std::vector<BigInt> p_op = {1, 1, 3, 13, 71, 486, 3982};
    const std::vector<BigInt> q_op = {1, 1, 4, 20, 130, 1052, 10214};
    const std::vector<BigInt> r_op = {1, 1, 3, 7, 15, 31, 63};
    const std::vector<BigInt> s_op = {1, 1, 2, 4, 7, 12, 20};
    const std::vector<BigInt> r_b = {1, 1, 3, 5, 7, 9, 11};
    const std::vector<BigInt> s_b = {1, 1, 2, 3, 4, 5, 6};
    for (int n = 0; n <= 6; ++n) {
        REQUIRE(seq_p(n) == p[static_cast<std::size_t>(n)]);
        REQUIRE(seq_q(n) == q[static_cast<std::size_t>(n)]);
        REQUIRE(seq_r(n) == r[static_cast<std::size_t>(n)]);
        REQUIRE(seq_s(n) == s[static_cast<std::size_t>(n)]);
        REQUIRE(seq_p_op(n) == p_op[static_cast<std::size_t>(n)]);
        REQUIRE(seq_q_op(n) == q_op[static_cast<std::size_t>(n)]);
        REQUIRE(seq_r_op(n) == r_op[static_cast<std::size_t>(n)]);
        REQUIRE(seq_s_op(n) == s_op[static_cast<std::size_t>(n)]);
        REQUIRE(seq_r_b(n) == r_b[static_cast<std::size_t>(n)]);
        REQUIRE(seq_s_b(n) == s_b[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("auxiliary sequences", "[sequences]") {
    REQUIRE(seq_g(0) == 0);
    REQUIRE(seq_g(1) == 1);
    REQUIRE(seq_g(2) == 1);
    REQUIRE(seq_g(3) == BigRat(3, 2));
    REQUIRE(fibonacci(0) == 0);
    REQUIRE(fibonacci(1) == 1);
    REQUIRE(fibonacci(10) == 55);
}

TEST_CASE("recurrences agree with closed forms in exact arithmetic", "[sequences]") {
    for (int n = 0; n <= 40; ++n) REQUIRE(seq_r(n) == seq_r_closed(n));
    for (int n = 1; n <= 40; ++n) {
        REQUIRE(seq_p_op(n) == seq_p_op_closed(n));
        REQUIRE(seq_q_op(n) == seq_q_op_closed(n));
    }
}

TEST_CASE("ordinary generating function of r", "[sequences]") {
    // (1 - z) / (1 - 2z - z^2)
    const auto coeffs = series_quotient({BigRat(1), BigRat(-1)}, {BigRat(1), BigRat(-2), BigRat(-1)}, 10);
    for (int n = 0; n <= 10; ++n) REQUIRE(coeffs[static_cast<std::size_t>(n)] == BigRat(seq_r(n)));
}

TEST_CASE("exponential generating functions", "[sequences]") {
    SECTION("(2e^z - 2z - z^2) / (2 - 2z - z^2) generates p_op") {
        std::vector<BigRat> num(11);
        for (int m = 0; m <= 10; ++m) num[static_cast<std::size_t>(m)] = 2 * inv_factorial(m);
        num[1] -= 2;
        num[2] -= 1;
        const auto coeffs = series_quotient(num, {BigRat(2), BigRat(-2), BigRat(-1)}, 10);
        for (int n = 0; n <= 10; ++n)
            REQUIRE(coeffs[static_cast<std::size_t>(n)] * factorial(n) == BigRat(seq_p_op(n)));
    }
    SECTION("(2e^z - 1 - 2z - z^2) / (1 - z - z^2) generates q_op") {
        std::vector<BigRat> num(11);
        for (int m = 0; m <= 10; ++m) num[static_cast<std::size_t>(m)] = 2 * inv_factorial(m);
        num[0] -= 1;
        num[1] -= 2;
        num[2] -= 1;
        const auto coeffs = series_quotient(num, {BigRat(1), BigRat(-1), BigRat(-1)}, 10);
        for (int n = 0; n <= 10; ++n)
            REQUIRE(coeffs[static_cast<std::size_t>(n)] * factorial(n) == BigRat(seq_q_op(n)));
    }
}

TEST_CASE("sequences match the enumeration censuses", "[sequences]") {
    for (int n = 1; n <= 6; ++n) {
        const Census c = census(n);
        REQUIRE(c.p == seq_p(n));
        REQUIRE(c.q == seq_q(n));
        REQUIRE(c.r == seq_r(n));
        REQUIRE(c.s == seq_s(n));
        REQUIRE(c.p_op == seq_p_op(n));
        REQUIRE(c.q_op == seq_q_op(n));
        REQUIRE(c.r_op == seq_r_op(n));
        REQUIRE(c.s_op == seq_s_op(n));
        REQUIRE(c.r_b == seq_r_b(n));
        REQUIRE(c.s_b == seq_s_b(n));
    }
}

TEST_CASE("quasilinear weak orderings against the bisymmetric members", "[sequences]") {
    // two enumeration routes: filter the weak orderings directly, or collect
    // the weak orderings of the bisymmetric members
    for (int n = 1; n <= 6; ++n) {
        const Census c = census(n);
        std::set<WeakOrdering> from_members;
        for_each_member(n, [&](const OpTable& f, const WeakOrdering& w, const std::vector<BlockChoice>&) {
            bool quasi = true;
            for (int b = 1; b < w.block_count(); ++b) quasi &= (w.block(b).size() == 1);
            if (quasi) from_members.insert(w);
            (void)f;
        });
        REQUIRE(c.quasilinear_weak_orderings == BigInt(static_cast<int>(from_members.size())));
    }
}

TEST_CASE("sequence tables", "[sequences]") {
    const SequenceTable t = sequence_table(SequenceFamily::r, 6);
    REQUIRE(t.name == "r");
    REQUIRE(t.values.size() == 7);
    REQUIRE(t.values[6] == BigRat(99));
    const SequenceTable g = sequence_table(SequenceFamily::g, 3);
    REQUIRE(g.values[3] == BigRat(3, 2));
}
