#ifndef EPGRAPH_GROUP_GRAPHS_HPP
#define EPGRAPH_GROUP_GRAPHS_HPP

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "epgraph/graph.hpp"
#include "epgraph/group.hpp"
#include "epgraph/numtheory.hpp"

namespace epg {

inline constexpr std::size_t kDefaultGraphCap = 2000;

/// Joined iff one is a power of the other (irreflexive: x == y is an error).
inline bool power_adjacent(const FiniteGroup& g, ElemId x, ElemId y) {
    if (x == y) throw InputError("power_adjacent: adjacency is irreflexive");
    const CyclicSubgroup cx = cyclic_closure(g, x);
    if (std::find(cx.elements.begin(), cx.elements.end(), y) != cx.elements.end()) return true;
    const CyclicSubgroup cy = cyclic_closure(g, y);
    return std::find(cy.elements.begin(), cy.elements.end(), x) != cy.elements.end();
}

/// Joined iff the group generated by the pair is cyclic.
inline bool enhanced_adjacent(const FiniteGroup& g, ElemId x, ElemId y) {
    if (x == y) throw InputError("enhanced_adjacent: adjacency is irreflexive");
    const ElemId pair[2] = {x, y};
    const std::vector<ElemId> closure = subgroup_closure(g, pair);
    return detail::is_cyclic_subgroup_unchecked(g, closure);
}

/// Joined in the enhanced power graph but not in the power graph.
inline bool delta_adjacent(const FiniteGroup& g, ElemId x, ElemId y) {
    return enhanced_adjacent(g, x, y) && !power_adjacent(g, x, y);
}

/// Precomputed per-element cyclic-subgroup data for bulk adjacency queries.
/// Enhanced adjacency of x and y depends only on the pair (<x>, <y>), so
/// results are memoised per unordered pair of canonical generators; the
/// cache tolerates concurrent queries (mutex-guarded, duplicates recomputed
/// at worst).
///
/// The cyclicity test itself avoids materialising <x,y>: for commuting
/// generators, <x><y> is cyclic iff |<x> ∩ <y>| = gcd(|x|,|y|) (both say
/// |<x,y>| = lcm(|x|,|y|)); non-commuting pairs are never cyclic. This is
/// equivalent to the closure test and the unit suite checks the two routes
/// against each other.
class AdjacencyOracle {
public:
    struct SubgroupInfo {
        std::uint64_t order = 0;
        std::vector<ElemId> powers;  // [g^0, ..., g^{q-1}]
        std::vector<ElemId> members; // same ids, ascending
    };

    explicit AdjacencyOracle(const FiniteGroup& g) : group_(g) {
        const std::uint64_t n = g.order();
        order_.assign(n, 0);
        dlog_.assign(n, 0);
        canon_.assign(n, static_cast<ElemId>(n)); // sentinel: unassigned
        for (ElemId x = 0; x < n; ++x) {
            if (canon_[x] != static_cast<ElemId>(n)) continue;
            const CyclicSubgroup c = cyclic_closure(g, x);
            const ElemId canon = canonical_generator(g, c);
            auto [it, fresh] = subgroups_.try_emplace(canon);
            if (fresh) {
                SubgroupInfo& info = it->second;
                info.powers = (canon == x) ? c.elements : cyclic_closure(g, canon).elements;
                info.order = info.powers.size();
                info.members = info.powers;
                std::sort(info.members.begin(), info.members.end());
            }
            const SubgroupInfo& info = it->second;
            const std::uint64_t q = info.order;
            if (q == 1) {
                canon_[0] = canon;
                order_[0] = 1;
                continue;
            }
            // stamp every generator of <x> with its discrete log; the other
            // members belong to smaller subgroups and are stamped when their
            // own orbit is visited
            for (std::uint64_t k = 1; k < q; ++k) {
                if (std::gcd(k, q) != 1) continue;
                canon_[info.powers[k]] = canon;
                order_[info.powers[k]] = q;
                dlog_[info.powers[k]] = k;
            }
        }
    }

    const FiniteGroup& group() const { return group_; }
    std::uint64_t order_of(ElemId x) const { return order_[x]; }
    ElemId canonical_of(ElemId x) const { return canon_[x]; }
    /// k with x = canonical_of(x)^k (0 for the identity).
    std::uint64_t dlog_of(ElemId x) const { return dlog_[x]; }
    const SubgroupInfo& subgroup_of(ElemId x) const { return subgroups_.at(canon_[x]); }
    std::size_t subgroup_count() const { return subgroups_.size(); }

    bool in_subgroup(ElemId member, ElemId of) const {
        const SubgroupInfo& info = subgroups_.at(canon_[of]);
        return std::binary_search(info.members.begin(), info.members.end(), member);
    }

    bool power_adjacent(ElemId x, ElemId y) const {
        if (x == y) throw InputError("power_adjacent: adjacency is irreflexive");
        return in_subgroup(y, x) || in_subgroup(x, y);
    }

    bool enhanced_adjacent(ElemId x, ElemId y) const {
        if (x == y) throw InputError("enhanced_adjacent: adjacency is irreflexive");
        const ElemId a = canon_[x], b = canon_[y];
        if (a == b) return true; // same cyclic subgroup
        const std::uint64_t key =
            (std::uint64_t{std::min(a, b)} << 32) | std::uint64_t{std::max(a, b)};
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            if (auto it = cyclic_pair_cache_.find(key); it != cyclic_pair_cache_.end())
                return it->second;
        }
        const bool result = pair_generates_cyclic(a, b);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cyclic_pair_cache_.emplace(key, result);
        return result;
    }

    bool delta_adjacent(ElemId x, ElemId y) const {
        return enhanced_adjacent(x, y) && !power_adjacent(x, y);
    }

private:
    bool pair_generates_cyclic(ElemId a, ElemId b) const {
        if (group_.multiply(a, b) != group_.multiply(b, a)) return false;
        const SubgroupInfo& sa = subgroups_.at(a);
        const SubgroupInfo& sb = subgroups_.at(b);
        const std::uint64_t target = std::gcd(sa.order, sb.order);
        std::uint64_t shared = 0;
        auto i = sa.members.begin();
        auto j = sb.members.begin();
        while (i != sa.members.end() && j != sb.members.end()) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else { ++shared; ++i; ++j; }
        }
        return shared == target;
    }

    const FiniteGroup& group_;
    std::vector<std::uint64_t> order_;
    std::vector<std::uint64_t> dlog_;
    std::vector<ElemId> canon_;
    std::unordered_map<ElemId, SubgroupInfo> subgroups_;
    mutable std::unordered_map<std::uint64_t, bool> cyclic_pair_cache_;
    mutable std::mutex cache_mutex_;
};

enum class GraphKind { Power, Enhanced, Delta };

/// Materialises the chosen graph on all of G (vertex id = element id,
/// labels = element orders). Above the cap this throws; the pairwise
/// predicates stay available at any order.
inline SimpleGraph build_graph(const AdjacencyOracle& oracle, GraphKind kind,
                               std::size_t cap = kDefaultGraphCap) {
    const FiniteGroup& g = oracle.group();
    if (g.order() > cap) throw CapExceeded("build_graph: group order exceeds graph cap");
    const std::size_t n = g.order();
    SimpleGraph graph(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const ElemId x = static_cast<ElemId>(u), y = static_cast<ElemId>(v);
            bool joined = false;
            switch (kind) {
            case GraphKind::Power: joined = oracle.power_adjacent(x, y); break;
            case GraphKind::Enhanced: joined = oracle.enhanced_adjacent(x, y); break;
            case GraphKind::Delta: joined = oracle.delta_adjacent(x, y); break;
            }
            if (joined) graph.add_edge(u, v);
        }
    }
    std::vector<std::uint64_t> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = oracle.order_of(static_cast<ElemId>(v));
    graph.set_labels(std::move(labels));
    return graph;
}

inline SimpleGraph build_graph(const FiniteGroup& g, GraphKind kind,
                               std::size_t cap = kDefaultGraphCap) {
    if (g.order() > cap) throw CapExceeded("build_graph: group order exceeds graph cap");
    const AdjacencyOracle oracle(g);
    return build_graph(oracle, kind, cap);
}

/// Gruenberg-Kegel (prime) graph: vertices are the prime divisors of |G|,
/// p and q joined iff pq divides some element order.
struct GkGraph {
    std::vector<std::uint64_t> primes;                           // ascending
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q, sorted

    bool adjacent(std::uint64_t p, std::uint64_t q) const {
        if (p > q) std::swap(p, q);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(p, q));
    }
};

/// Built from the order spectrum: an element of order pq exists iff pq
/// divides some member of the spectrum.
inline GkGraph build_gk_graph(const FiniteGroup& g) {
    GkGraph gk;
    for (auto [p, e] : factorise(g.order())) gk.primes.push_back(p);
    const std::vector<std::uint64_t> spectrum = order_spectrum(g);
    for (std::size_t i = 0; i < gk.primes.size(); ++i) {
        for (std::size_t j = i + 1; j < gk.primes.size(); ++j) {
            const std::uint64_t pq = gk.primes[i] * gk.primes[j];
            for (std::uint64_t s : spectrum) {
                if (s % pq == 0) {
                    gk.edges.emplace_back(gk.primes[i], gk.primes[j]);
                    break;
                }
            }
        }
    }
    return gk;
}

/// Connected components; isolated primes count, the empty graph has none.
inline std::size_t gk_component_count(const GkGraph& gk) {
    std::vector<std::size_t> root(gk.primes.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    auto index_of = [&](std::uint64_t p) {
        return static_cast<std::size_t>(
            std::lower_bound(gk.primes.begin(), gk.primes.end(), p) - gk.primes.begin());
    };
    for (auto [p, q] : gk.edges) root[find(index_of(p))] = find(index_of(q));
    std::size_t components = 0;
    for (std::size_t v = 0; v < gk.primes.size(); ++v)
        if (find(v) == v) ++components;
    return components;
}

/// Primes p | |G| with n/2 < p <= n (n the maximal element order) that are
/// isolated in the Gruenberg-Kegel graph. All qualifying primes should be
/// isolated; this verifies rather than assumes.
inline std::vector<std::uint64_t> isolated_large_primes(const FiniteGroup& g) {
    const std::uint64_t n = max_element_order(g);
    const GkGraph gk = build_gk_graph(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : gk.primes) {
        if (2 * p <= n || p > n) continue;
        bool isolated = true;
        for (auto [a, b] : gk.edges)
            if (a == p || b == p) { isolated = false; break; }
        if (isolated) out.push_back(p);
    }
    return out;
}

/// Clique number of the difference graph via the antichain formula:
/// max over the order spectrum of the largest divisor-lattice antichain.
inline std::uint64_t delta_clique_number(const FiniteGroup& g) {
    std::uint64_t best = 0;
    for (std::uint64_t s : order_spectrum(g)) best = std::max(best, alpha_de_bruijn(s));
    return best;
}

} // namespace epg

#endif
