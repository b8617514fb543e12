#ifndef EPGRAPH_FAREY_HPP
#define EPGRAPH_FAREY_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "epgraph/errors.hpp"
#include "epgraph/numtheory.hpp"

namespace epg {

/// A reduced fraction p/q in (0,1]. All arithmetic on fractions is exact
/// integer arithmetic; nothing here touches floating point.
struct Fraction {
    std::uint64_t p;
    std::uint64_t q;

    Fraction(std::uint64_t num, std::uint64_t den) : p(num), q(den) {
        if (den == 0 || num == 0 || num > den)
            throw InputError("Fraction: need 0 < p/q <= 1");
        const std::uint64_t g = std::gcd(p, q);
        p /= g;
        q /= g;
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.p == b.p && a.q == b.q;
    }
    // value order; exact via cross multiplication
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.p * b.q < b.p * a.q;
    }
};

/// All reduced fractions p/q with q <= n and 0 < p/q <= 1, ascending by value.
inline std::vector<Fraction> farey_fractions(std::uint64_t n) {
    if (n == 0) throw InputError("farey_fractions: n must be positive");
    std::vector<Fraction> out;
    for (std::uint64_t q = 1; q <= n; ++q)
        for (std::uint64_t p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

/// ceil(n*p/q), exactly, for a fraction in the domain (q <= n).
inline std::uint64_t ceil_map(const Fraction& fr, std::uint64_t n) {
    if (fr.q > n) throw InputError("ceil_map: denominator exceeds n");
    return (n * fr.p + fr.q - 1) / fr.q;
}

/// The indexed sets A_1..A_n: A_q is the image of the denominator-q
/// fractions under the ceiling map, stored ascending.
struct ColourFamily {
    std::uint64_t n;
    std::vector<std::vector<std::uint64_t>> sets; // sets[q-1] = A_q
};

/// A_q for a single denominator, without building the whole family.
inline std::vector<std::uint64_t> colour_set_for_order(std::uint64_t q, std::uint64_t n) {
    if (q == 0 || n == 0 || q > n) throw InputError("colour_set_for_order: need 1 <= q <= n");
    std::vector<std::uint64_t> a;
    for (std::uint64_t p = 1; p <= q; ++p)
        if (std::gcd(p, q) == 1) a.push_back((n * p + q - 1) / q);
    std::sort(a.begin(), a.end());
    return a;
}

inline ColourFamily build_colour_families(std::uint64_t n) {
    if (n == 0) throw InputError("build_colour_families: n must be positive");
    ColourFamily fam{n, {}};
    fam.sets.reserve(n);
    for (std::uint64_t q = 1; q <= n; ++q) fam.sets.push_back(colour_set_for_order(q, n));
    return fam;
}

/// One violated family property. kind==Size: |A_q| != phi(q).
/// kind==Overlap: lcm(q,q2) <= n but A_q and A_q2 intersect.
struct FamilyViolation {
    enum class Kind { Size, Overlap };
    Kind kind;
    std::uint64_t q;
    std::uint64_t q2;     // Overlap only
    std::uint64_t detail; // Size: actual |A_q|; Overlap: a shared colour
};

struct FamilyReport {
    std::uint64_t n = 0;
    std::vector<FamilyViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks both family properties: |A_q| = phi(q), and disjointness of
/// A_q, A_q' whenever lcm(q,q') <= n. Violations are report content.
inline FamilyReport verify_colour_families(const ColourFamily& fam) {
    FamilyReport rep{fam.n, {}};
    for (std::uint64_t q = 1; q <= fam.sets.size(); ++q) {
        const auto& a = fam.sets[q - 1];
        if (a.size() != totient(q))
            rep.violations.push_back({FamilyViolation::Kind::Size, q, 0, a.size()});
    }
    for (std::uint64_t q = 1; q <= fam.sets.size(); ++q) {
        for (std::uint64_t q2 = q + 1; q2 <= fam.sets.size(); ++q2) {
            if (lcm_checked(q, q2) > fam.n) continue;
            const auto& a = fam.sets[q - 1];
            const auto& b = fam.sets[q2 - 1];
            std::vector<std::uint64_t> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(shared));
            if (!shared.empty())
                rep.violations.push_back(
                    {FamilyViolation::Kind::Overlap, q, q2, shared.front()});
        }
    }
    return rep;
}

/// A pair of distinct fractions with equal ceiling-map value whose
/// denominators have lcm <= n. The construction guarantees none exist.
struct CollisionViolation {
    Fraction a;
    Fraction b;
    std::uint64_t value;
};

struct CollisionReport {
    std::uint64_t n = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<CollisionViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustively scans every pair of distinct fractions sharing a ceiling-map
/// value and confirms lcm(q,q') > n for each.
inline CollisionReport verify_key_observation(std::uint64_t n) {
    if (n == 0) throw InputError("verify_key_observation: n must be positive");
    CollisionReport rep{n, 0, {}};
    std::vector<std::vector<Fraction>> by_value(n + 1);
    for (const Fraction& fr : farey_fractions(n)) by_value[ceil_map(fr, n)].push_back(fr);
    for (std::uint64_t v = 1; v <= n; ++v) {
        const auto& bucket = by_value[v];
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                ++rep.pairs_checked;
                if (lcm_checked(bucket[i].q, bucket[j].q) <= n)
                    rep.violations.push_back({bucket[i], bucket[j], v});
            }
        }
    }
    return rep;
}

} // namespace epg

#endif
