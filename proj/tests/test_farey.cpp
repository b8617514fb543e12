#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "epgraph/farey.hpp"

using namespace epg;

TEST_CASE("fraction reduction and domain") {
    const Fraction f(6, 8);
    CHECK(f.p == 3);
    CHECK(f.q == 4);
    CHECK_THROWS_AS(Fraction(0, 3), InputError);
    CHECK_THROWS_AS(Fraction(4, 3), InputError);
    CHECK_THROWS_AS(Fraction(1, 0), InputError);
}

TEST_CASE("farey enumeration") {
    CHECK(farey_fractions(1) == std::vector<Fraction>{{1, 1}});
    CHECK(farey_fractions(3) == std::vector<Fraction>{{1, 3}, {1, 2}, {2, 3}, {1, 1}});
    CHECK(farey_fractions(12).size() == 46);
    CHECK_THROWS_AS(farey_fractions(0), InputError);

    // strictly ascending, and sized by the totient sum
    for (std::uint64_t n : {20, 57, 100}) {
        const auto fr = farey_fractions(n);
        std::uint64_t phi_sum = 0;
        for (std::uint64_t q = 1; q <= n; ++q) phi_sum += totient(q);
        CHECK(fr.size() == phi_sum);
        for (std::size_t i = 1; i < fr.size(); ++i) REQUIRE(fr[i - 1] < fr[i]);
    }
}

TEST_CASE("ceiling map values") {
    for (std::uint64_t n : {1, 2, 7, 12, 100}) CHECK(ceil_map(Fraction(1, 1), n) == n);
    CHECK(ceil_map(Fraction(2, 3), 12) == 8);
    CHECK(ceil_map(Fraction(1, 12), 12) == 1);
    CHECK_THROWS_AS(ceil_map(Fraction(1, 5), 4), InputError);
}

TEST_CASE("ceiling map is the exact integer ceiling") {
    detail::SplitMix64 rng(777);
    for (int t = 0; t < 5000; ++t) {
        const std::uint64_t q = rng.next() % 400 + 1;
        const std::uint64_t p = rng.next() % q + 1;
        const std::uint64_t n = q + rng.next() % 1000;
        const Fraction fr(p, q);
        const std::uint64_t m = ceil_map(fr, n);
        // m-1 < n*p/q <= m, in exact integer form
        REQUIRE(fr.q * (m - 1) < n * fr.p);
        REQUIRE(n * fr.p <= fr.q * m);
    }
}

TEST_CASE("colour families for n=12") {
    const ColourFamily fam = build_colour_families(12);
    REQUIRE(fam.sets.size() == 12);
    using V = std::vector<std::uint64_t>;
    CHECK(fam.sets[0] == V{12});
    CHECK(fam.sets[1] == V{6});
    CHECK(fam.sets[2] == V{4, 8});
    CHECK(fam.sets[3] == V{3, 9});
    CHECK(fam.sets[4] == V{3, 5, 8, 10});
    CHECK(fam.sets[5] == V{2, 10});
    CHECK(fam.sets[6] == V{2, 4, 6, 7, 9, 11});
    CHECK(fam.sets[7] == V{2, 5, 8, 11});
    CHECK(fam.sets[8] == V{2, 3, 6, 7, 10, 11});
    CHECK(fam.sets[9] == V{2, 4, 9, 11});
    CHECK(fam.sets[10] == V{2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    CHECK(fam.sets[11] == V{1, 5, 7, 11});
}

TEST_CASE("small families") {
    const ColourFamily one = build_colour_families(1);
    CHECK(one.sets == std::vector<std::vector<std::uint64_t>>{{1}});
    const ColourFamily three = build_colour_families(3);
    using V = std::vector<std::uint64_t>;
    CHECK(three.sets[0] == V{3});
    CHECK(three.sets[1] == V{2});
    CHECK(three.sets[2] == V{1, 2});
    // A_2 and A_3 share colour 2, allowed because lcm(2,3) = 6 > 3
    CHECK(verify_colour_families(three).ok());
}

TEST_CASE("family verification flags a tampered family") {
    ColourFamily bad{2, {{1}, {1}}};
    const FamilyReport rep = verify_colour_families(bad);
    REQUIRE_FALSE(rep.ok());
    bool found_overlap = false;
    for (const auto& v : rep.violations)
        if (v.kind == FamilyViolation::Kind::Overlap && v.q == 1 && v.q2 == 2)
            found_overlap = true;
    CHECK(found_overlap);
}

TEST_CASE("family properties hold for all n up to 120") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        const FamilyReport rep = verify_colour_families(build_colour_families(n));
        REQUIRE(rep.ok());
    }
}

TEST_CASE("collision pairs always have large lcm") {
    CHECK(verify_key_observation(1).ok());
    const CollisionReport three = verify_key_observation(3);
    CHECK(three.ok());
    CHECK(three.pairs_checked > 0); // f(1/2) = f(2/3) = 2 collide, lcm 6 > 3
    for (std::uint64_t n = 1; n <= 60; ++n) REQUIRE(verify_key_observation(n).ok());
}

TEST_CASE("colour_set_for_order matches the full family") {
    for (std::uint64_t n : {5, 17, 48}) {
        const ColourFamily fam = build_colour_families(n);
        for (std::uint64_t q = 1; q <= n; ++q)
            REQUIRE(colour_set_for_order(q, n) == fam.sets[q - 1]);
    }
}
