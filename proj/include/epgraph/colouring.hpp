#ifndef EPGRAPH_COLOURING_HPP
#define EPGRAPH_COLOURING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "epgraph/exact_solvers.hpp"
#include "epgraph/farey.hpp"
#include "epgraph/graph.hpp"
#include "epgraph/group.hpp"
#include "epgraph/group_graphs.hpp"

namespace epg {

/// Colours every element of G with a colour in {1..n}, n the maximal element
/// order, properly for the enhanced power graph:
///   - an element of order q takes its colour from A_q;
///   - within the cyclic subgroup <g> (g the canonical generator), the
///     element g^k receives the r-th smallest member of A_q, where r is the
///     1-based rank of k among the integers in [1,q] coprime to q.
/// The identity (q = 1, A_1 = {n}) gets colour n.
///
/// The choice of which generator receives which colour is fixed by the
/// canonical generator plus coprime rank, so colourings are reproducible
/// run to run.
inline Colouring colour_group(const AdjacencyOracle& oracle) {
    const FiniteGroup& g = oracle.group();
    std::uint64_t n = 1;
    for (ElemId x = 0; x < g.order(); ++x) n = std::max(n, oracle.order_of(x));
    struct SubgroupColours {
        std::vector<std::uint64_t> coprime_ks; // ascending, in [1,q]
        std::vector<std::uint64_t> colour_set; // A_q ascending
    };
    std::unordered_map<ElemId, SubgroupColours> cache;
    Colouring result{std::vector<std::uint64_t>(g.order(), 0), n};
    for (ElemId x = 0; x < g.order(); ++x) {
        const std::uint64_t q = oracle.order_of(x);
        auto [it, fresh] = cache.try_emplace(oracle.canonical_of(x));
        SubgroupColours& info = it->second;
        if (fresh) {
            for (std::uint64_t k = 1; k <= q; ++k)
                if (std::gcd(k, q) == 1) info.coprime_ks.push_back(k);
            info.colour_set = colour_set_for_order(q, n);
        }
        std::uint64_t k = oracle.dlog_of(x);
        if (k == 0) k = q; // identity: g^0 = g^q, and gcd(q,q)=1 only for q=1
        const std::size_t rank = static_cast<std::size_t>(
            std::lower_bound(info.coprime_ks.begin(), info.coprime_ks.end(), k) -
            info.coprime_ks.begin());
        result.colours[x] = info.colour_set[rank];
    }
    return result;
}

inline Colouring colour_group(const FiniteGroup& g) {
    return colour_group(AdjacencyOracle(g));
}

struct WeakPerfectnessOptions {
    bool exact_cross_check = false;
    std::size_t graph_cap = kDefaultGraphCap;
    std::size_t clique_cap = kDefaultCliqueCap;
    std::size_t chromatic_cap = kDefaultChromaticCap;
    /// Above this group order, properness is validated exhaustively within
    /// each cyclic subgroup but only on sampled pairs across subgroups.
    std::uint64_t exhaustive_pair_limit = 5000;
    std::uint64_t sampled_pairs = 2'000'000;
};

struct WeakPerfectnessCertificate {
    std::uint64_t n = 0;                 // max element order = clique = chromatic
    std::vector<ElemId> clique_witness;  // a cyclic subgroup of order n, ascending
    Colouring colouring;
    bool family_ok = false;       // A_q invariants over the order spectrum
    bool witness_ok = false;      // witness has size n and is pairwise joined
    bool properness_ok = false;
    bool properness_exhaustive = false;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<ElemId, ElemId>> violating_pair;
    std::optional<std::uint64_t> exact_clique;
    std::optional<std::uint64_t> exact_chromatic;

    bool pass() const {
        if (!(family_ok && witness_ok && properness_ok)) return false;
        if (exact_clique && *exact_clique != n) return false;
        if (exact_chromatic && *exact_chromatic != n) return false;
        return true;
    }
};

namespace detail {

// The slice of the colour-family invariants the colouring actually relies
// on: sizes |A_q| = phi(q) for q in the spectrum, disjointness for spectrum
// pairs with lcm <= n.
inline bool family_slice_ok(const std::vector<std::uint64_t>& spectrum, std::uint64_t n) {
    std::vector<std::vector<std::uint64_t>> sets;
    sets.reserve(spectrum.size());
    for (std::uint64_t q : spectrum) {
        sets.push_back(colour_set_for_order(q, n));
        if (sets.back().size() != totient(q)) return false;
    }
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        for (std::size_t j = i + 1; j < spectrum.size(); ++j) {
            if (lcm_checked(spectrum[i], spectrum[j]) > n) continue;
            std::vector<std::uint64_t> shared;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                  sets[j].end(), std::back_inserter(shared));
            if (!shared.empty()) return false;
        }
    }
    return true;
}

} // namespace detail

/// Certifies clique number = chromatic number = n for the enhanced power
/// graph of G: a cyclic subgroup of maximal order witnesses clique >= n, and
/// the constructed colouring witnesses chromatic <= n. Properness is checked
/// pairwise (exhaustively up to the configured limit, sampled above it, and
/// always exhaustively within every cyclic subgroup). With exact_cross_check
/// the graph-core solvers confirm both numbers when the graph fits the caps.
inline WeakPerfectnessCertificate verify_weak_perfectness(
    const FiniteGroup& g, const WeakPerfectnessOptions& opts = {}) {
    WeakPerfectnessCertificate cert;
    const AdjacencyOracle oracle(g);
    std::vector<std::uint64_t> spectrum;
    spectrum.reserve(g.order());
    for (ElemId x = 0; x < g.order(); ++x) spectrum.push_back(oracle.order_of(x));
    std::sort(spectrum.begin(), spectrum.end());
    spectrum.erase(std::unique(spectrum.begin(), spectrum.end()), spectrum.end());
    cert.n = spectrum.back();
    cert.family_ok = detail::family_slice_ok(spectrum, cert.n);
    cert.colouring = colour_group(oracle);

    // clique witness: the cyclic subgroup generated by a max-order element
    for (ElemId x = 0; x < g.order(); ++x) {
        if (oracle.order_of(x) == cert.n) {
            cert.clique_witness = oracle.subgroup_of(x).members;
            break;
        }
    }
    cert.witness_ok = cert.clique_witness.size() == cert.n;
    if (cert.witness_ok && cert.n <= 2000) {
        for (std::size_t i = 0; i < cert.clique_witness.size() && cert.witness_ok; ++i)
            for (std::size_t j = i + 1; j < cert.clique_witness.size(); ++j)
                if (!oracle.enhanced_adjacent(cert.clique_witness[i], cert.clique_witness[j])) {
                    cert.witness_ok = false;
                    break;
                }
    }

    // properness: only equal-colour pairs can violate, so group by colour
    cert.properness_ok = true;
    std::vector<std::vector<ElemId>> by_colour(cert.n + 1);
    for (ElemId x = 0; x < g.order(); ++x) by_colour[cert.colouring.colours[x]].push_back(x);
    const bool exhaustive = g.order() <= opts.exhaustive_pair_limit;
    cert.properness_exhaustive = exhaustive;
    auto check_pair = [&](ElemId u, ElemId v) {
        ++cert.pairs_checked;
        if (oracle.enhanced_adjacent(u, v)) {
            cert.properness_ok = false;
            if (!cert.violating_pair) cert.violating_pair = std::make_pair(u, v);
        }
    };
    if (exhaustive) {
        for (const auto& cls : by_colour)
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j)
                    check_pair(cls[i], cls[j]);
    } else {
        // within every cyclic subgroup all pairs are joined: colours there
        // must be pairwise distinct, and that part is always exhaustive
        std::vector<bool> seen_canon(g.order(), false);
        for (ElemId x = 0; x < g.order() && cert.properness_ok; ++x) {
            const ElemId canon = oracle.canonical_of(x);
            if (seen_canon[canon]) continue;
            seen_canon[canon] = true;
            const auto& members = oracle.subgroup_of(x).members;
            std::vector<std::uint64_t> cols;
            cols.reserve(members.size());
            for (ElemId m : members) cols.push_back(cert.colouring.colours[m]);
            std::sort(cols.begin(), cols.end());
            cert.pairs_checked += members.size() * (members.size() - 1) / 2;
            if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
                cert.properness_ok = false;
                cert.violating_pair = std::nullopt; // located below by sampling
            }
        }
        detail::SplitMix64 rng(0x455047636f6c6full);
        const std::uint64_t per_class = opts.sampled_pairs / std::max<std::uint64_t>(cert.n, 1);
        for (const auto& cls : by_colour) {
            if (cls.size() < 2) continue;
            const std::uint64_t all = cls.size() * (cls.size() - 1) / 2;
            if (all <= per_class) {
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (std::size_t j = i + 1; j < cls.size(); ++j)
                        check_pair(cls[i], cls[j]);
            } else {
                for (std::uint64_t t = 0; t < per_class; ++t) {
                    const std::size_t i = rng.next() % cls.size();
                    std::size_t j = rng.next() % (cls.size() - 1);
                    if (j >= i) ++j;
                    check_pair(cls[i], cls[j]);
                }
            }
        }
    }

    if (opts.exact_cross_check) {
        const SimpleGraph epg = build_graph(oracle, GraphKind::Enhanced, opts.graph_cap);
        cert.exact_clique = clique_number_exact(epg, opts.clique_cap).size;
        cert.exact_chromatic = chromatic_number_exact(epg, opts.chromatic_cap).chromatic;
    }
    return cert;
}

} // namespace epg

#endif
