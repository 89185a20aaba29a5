#include <map>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qts/classify.hpp"
#include "qts/enumerate.hpp"
#include "qts/group_action.hpp"
#include "qts/sequences.hpp"

using namespace qts;

TEST_CASE("weak ordering stream", "[enumerate]") {
    REQUIRE(weak_orderings(1).size() == 1);
    REQUIRE(weak_orderings(3).size() == 13);
    REQUIRE(weak_orderings(6).size() == 4683);

    // no duplicates, deterministic order
    const auto first = weak_orderings(5);
    REQUIRE(std::set<WeakOrdering>(first.begin(), first.end()).size() == first.size());
    REQUIRE(first == weak_orderings(5));
    REQUIRE(first.front() == WeakOrdering::single_block(5));

    REQUIRE_THROWS_AS(weak_orderings(10), GuardError);
    REQUIRE_THROWS_AS(weak_orderings(0), std::invalid_argument);
}

TEST_CASE("member stream", "[enumerate]") {
    REQUIRE(members(2).size() == 4);
    REQUIRE(members(3).size() == 20);
    REQUIRE(members(6).size() == 12166);

    const auto all5 = members(5);
    REQUIRE(std::set<OpTable>(all5.begin(), all5.end()).size() == all5.size());

    for_each_member(4, [&](const OpTable& f, const WeakOrdering& w, const std::vector<BlockChoice>&) {
        const ClassReport rep = classify(f);
        if (!rep.member) FAIL("stream produced a non-member");
        if (*rep.weak_ordering != w) FAIL("stream weak ordering mismatch");
    });

    REQUIRE_THROWS_AS(members(9), GuardError);
}

TEST_CASE("quasitrivial table stream", "[enumerate]") {
    REQUIRE(quasitrivial_tables(2).size() == 4);
    REQUIRE(quasitrivial_tables(3).size() == 64);
    int associative = 0;
    for_each_quasitrivial_table(3, [&](const OpTable& f) { associative += is_associative(f); });
    REQUIRE(associative == 20);
    REQUIRE_THROWS_AS(quasitrivial_tables(5), GuardError);
}

TEST_CASE("structural enumeration equals the brute-force oracle", "[enumerate]") {
    for (int n = 1; n <= 4; ++n) {
        std::set<OpTable> brute;
        for_each_quasitrivial_table(n, [&](const OpTable& f) {
            if (is_associative(f)) brute.insert(f);
        });
        const auto structural = members(n);
        REQUIRE(std::set<OpTable>(structural.begin(), structural.end()) == brute);
    }
}

TEST_CASE("census values", "[enumerate]") {
    const Census c4 = census(4);
    REQUIRE(c4.q == 138);
    REQUIRE(c4.p == 75);
    REQUIRE(c4.r == 17);
    REQUIRE(c4.s == 8);
    REQUIRE(c4.q_op == 130);
    REQUIRE(c4.p_op == 71);
    REQUIRE(c4.r_op == 15);
    REQUIRE(c4.s_op == 7);

    const Census c3 = census(3);
    REQUIRE(c3.q_op == 20);
    REQUIRE(c3.p_op == 13);
    REQUIRE(c3.commutative == 6);
    REQUIRE(c3.anticommutative == 2);

    REQUIRE_THROWS_AS(census(9), GuardError);
}

TEST_CASE("census per-signature orbit counts follow the doubling rule", "[enumerate]") {
    for (int n = 1; n <= 6; ++n) {
        const Census c = census(n);
        BigInt total_orbits = 0;
        for (const auto& row : c.signatures) {
            BigInt expected = 1;
            for (int p : row.signature.parts())
                if (p >= 2) expected *= 2;
            REQUIRE(row.orbit_count == expected);
            REQUIRE(row.orbit_size == orbit_stab_sizes(row.signature).second);
            total_orbits += row.orbit_count;
        }
        REQUIRE(total_orbits == c.r);
    }
}

TEST_CASE("cross-section at n = 3", "[enumerate]") {
    const Census c = census(3);
    REQUIRE(c.r == 7);
    REQUIRE(c.s == 4);
    REQUIRE(c.p == 13);
    REQUIRE(c.q == 20);

    std::set<std::vector<int>> preimages;
    BigInt total = 0;
    for (const auto& row : c.signatures) {
        preimages.insert(preimage_from_signature(row.signature).counts());
        total += row.orbit_count * row.orbit_size;
    }
    REQUIRE(preimages == std::set<std::vector<int>>{{3, 3, 3}, {2, 2, 5}, {1, 4, 4}, {1, 3, 5}});
    REQUIRE(total == 20);
}

TEST_CASE("census counts match the composition formula", "[enumerate]") {
    for (int n = 1; n <= 7; ++n) REQUIRE(census(n).q == seq_q(n));
}
