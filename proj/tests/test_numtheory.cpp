#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "epgraph/numtheory.hpp"

using namespace epg;

namespace {

// direct-count oracle, no factorisation involved
std::uint64_t totient_by_counting(std::uint64_t q) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= q; ++k)
        if (std::gcd(k, q) == 1) ++count;
    return count;
}

} // namespace

TEST_CASE("totient basics") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK_THROWS_AS(totient(0), InputError);
}

TEST_CASE("totient matches direct counting") {
    for (std::uint64_t q = 1; q <= 300; ++q) CHECK(totient(q) == totient_by_counting(q));
}

TEST_CASE("totient is multiplicative on coprime pairs") {
    detail::SplitMix64 rng(12345);
    int done = 0;
    while (done < 1000) {
        const std::uint64_t a = rng.next() % 999 + 2;
        const std::uint64_t b = rng.next() % 999 + 2;
        if (std::gcd(a, b) != 1) continue;
        REQUIRE(totient(a * b) == totient(a) * totient(b));
        ++done;
    }
}

TEST_CASE("lcm_checked") {
    CHECK(lcm_checked(1, 7) == 7);
    CHECK(lcm_checked(4, 6) == 12);
    CHECK(lcm_checked(9, 9) == 9);
    CHECK_THROWS_AS(lcm_checked(0, 3), InputError);
    const std::uint64_t big = std::uint64_t{1} << 63;
    CHECK_THROWS_AS(lcm_checked(big, 3), std::overflow_error);
    CHECK(lcm_checked(std::uint64_t{1} << 62, 3) == 3 * (std::uint64_t{1} << 62));
}

TEST_CASE("divisor lattice structure") {
    const DivisorLattice lat(60);
    CHECK(lat.m == 4); // 2^2 * 3 * 5
    CHECK(lat.divisors == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
    std::uint64_t product = 1;
    std::size_t divisor_count = 1;
    for (auto [p, e] : lat.prime_factorisation) {
        for (unsigned i = 0; i < e; ++i) product *= p;
        divisor_count *= e + 1;
    }
    CHECK(product == 60);
    CHECK(divisor_count == lat.divisors.size());
}

TEST_CASE("alpha on known lattices") {
    CHECK(alpha_de_bruijn(1) == 1);
    CHECK(alpha_de_bruijn(97) == 1);   // chain 1-97
    CHECK(alpha_de_bruijn(12) == 2);   // {2,3} or {4,6}
    CHECK(alpha_de_bruijn(60) == 4);   // {4,6,10,15}
    CHECK(alpha_bruteforce(1) == 1);
    CHECK(alpha_bruteforce(12) == 2);
    CHECK(alpha_bruteforce(30) == 3);  // {2,3,5}
    CHECK_THROWS_AS(alpha_bruteforce(720), CapExceeded); // 30 divisors
}

TEST_CASE("level formula agrees with the antichain search") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        if (DivisorLattice(n).divisors.size() > 24) continue;
        REQUIRE(alpha_de_bruijn(n) == alpha_bruteforce(n));
    }
}

TEST_CASE("primes in the half interval") {
    CHECK(primes_in_half_interval(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_in_half_interval(7) == std::vector<std::uint64_t>{5, 7});
    CHECK(primes_in_half_interval(30) == std::vector<std::uint64_t>{17, 19, 23, 29});
    CHECK(primes_in_half_interval(1).empty());
}

TEST_CASE("factorise edge cases") {
    CHECK(factorise(1).empty());
    const auto f = factorise(40320); // 8!
    std::vector<std::pair<std::uint64_t, unsigned>> expected{{2, 7}, {3, 2}, {5, 1}, {7, 1}};
    CHECK(f == expected);
}
