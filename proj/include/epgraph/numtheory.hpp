#ifndef EPGRAPH_NUMTHEORY_HPP
#define EPGRAPH_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "epgraph/errors.hpp"

namespace epg {

namespace detail {

// Deterministic 64-bit stream for sampled checks (no global RNG state).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace detail

// Trial division is deliberately bounded: every number we factor here is an
// element order or a group order, both far below the bound.
inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorise(std::uint64_t n) {
    if (n == 0) throw InputError("factorise: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n && p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        if (n > kTrialDivisionBound * kTrialDivisionBound)
            throw CapExceeded("factorise: residual factor exceeds trial-division bound");
        out.emplace_back(n, 1); // residual is prime: no divisor up to sqrt survived
    }
    return out;
}

/// Euler's totient: count of integers in [1,q] coprime to q.
inline std::uint64_t totient(std::uint64_t q) {
    if (q == 0) throw InputError("totient: q must be positive");
    std::uint64_t phi = q;
    for (auto [p, e] : factorise(q)) phi -= phi / p;
    return phi;
}

/// lcm with overflow detection; overflow is an error, never a wrapped value.
inline std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw InputError("lcm_checked: arguments must be positive");
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t q = a / g;
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(q, b, &r))
        throw std::overflow_error("lcm_checked: result exceeds 64-bit range");
    return r;
}

/// The divisor lattice of n: divisors ascending, factorisation, and the
/// total prime-factor count with multiplicity.
struct DivisorLattice {
    std::uint64_t n;
    std::vector<std::uint64_t> divisors;
    std::vector<std::pair<std::uint64_t, unsigned>> prime_factorisation;
    unsigned m; // Omega(n): prime factors counted with multiplicity

    explicit DivisorLattice(std::uint64_t value)
        : n(value), prime_factorisation(factorise(value)), m(0) {
        for (auto [p, e] : prime_factorisation) m += e;
        divisors.push_back(1);
        for (auto [p, e] : prime_factorisation) {
            const std::size_t base = divisors.size();
            std::uint64_t pk = 1;
            for (unsigned k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < base; ++i)
                    divisors.push_back(divisors[i] * pk);
            }
        }
        std::sort(divisors.begin(), divisors.end());
    }
};

/// Omega(d): prime factors of d with multiplicity.
inline unsigned omega_count(std::uint64_t d) {
    unsigned m = 0;
    for (auto [p, e] : factorise(d)) m += e;
    return m;
}

/// Largest-antichain size in the divisor lattice of n, via the middle-level
/// characterisation: count divisors with floor(m/2) resp. ceil(m/2) prime
/// factors and take the max (the two counts coincide by the d -> n/d
/// symmetry, so this is safe for both parities of m).
inline std::uint64_t alpha_de_bruijn(std::uint64_t n) {
    const DivisorLattice lat(n);
    const unsigned lo = lat.m / 2;
    const unsigned hi = (lat.m + 1) / 2;
    std::uint64_t count_lo = 0, count_hi = 0;
    for (std::uint64_t d : lat.divisors) {
        const unsigned w = omega_count(d);
        if (w == lo) ++count_lo;
        if (w == hi) ++count_hi;
    }
    return std::max(count_lo, count_hi);
}

namespace detail {

// Exact maximum independent set on <= 64 vertices, branch and bound.
// Used as the antichain oracle over the divisibility comparability graph.
inline std::size_t max_independent_set(const std::vector<std::uint64_t>& adj,
                                       std::uint64_t candidates,
                                       std::size_t current,
                                       std::size_t best) {
    while (candidates) {
        if (current + static_cast<std::size_t>(__builtin_popcountll(candidates)) <= best)
            return best;
        const int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        // branch: take v (dropping its neighbours), fall through to skip v
        const std::size_t with_v =
            max_independent_set(adj, candidates & ~adj[v], current + 1, best);
        best = std::max(best, with_v);
    }
    return std::max(best, current);
}

} // namespace detail

/// Independent antichain oracle: exhaustive search over divisor subsets
/// that are pairwise incomparable under divisibility.
inline std::uint64_t alpha_bruteforce(std::uint64_t n) {
    const DivisorLattice lat(n);
    const std::size_t d = lat.divisors.size();
    if (d > 24) throw CapExceeded("alpha_bruteforce: divisor count exceeds 24");
    std::vector<std::uint64_t> adj(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j && lat.divisors[j] % lat.divisors[i] == 0)
                adj[i] |= std::uint64_t{1} << j, adj[j] |= std::uint64_t{1} << i;
    const std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    return detail::max_independent_set(adj, all, 0, 0);
}

/// All primes p with n/2 < p <= n, ascending.
inline std::vector<std::uint64_t> primes_in_half_interval(std::uint64_t n) {
    if (n == 0) throw InputError("primes_in_half_interval: n must be positive");
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
        if (2 * p > n) out.push_back(p);
    }
    return out;
}

} // namespace epg

#endif
