#ifndef EPGRAPH_EXACT_SOLVERS_HPP
#define EPGRAPH_EXACT_SOLVERS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "epgraph/graph.hpp"

namespace epg {

inline constexpr std::size_t kDefaultCliqueCap = 2000;
inline constexpr std::size_t kDefaultChromaticCap = 128;

namespace detail {

// Bitset helpers over vectors of 64-bit words.
using Words = std::vector<std::uint64_t>;

inline bool test_bit(const Words& w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1; }
inline void set_bit(Words& w, std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
inline void clear_bit(Words& w, std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

inline std::size_t popcount(const Words& w) {
    std::size_t c = 0;
    for (std::uint64_t x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
}

inline bool any(const Words& w) {
    for (std::uint64_t x : w)
        if (x) return true;
    return false;
}

// Branch-and-bound maximum clique (Tomita-style): candidates are greedily
// partitioned into colour classes, giving the bound |R| + colours(P).
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const SimpleGraph& g)
        : g_(g), n_(g.vertex_count()), words_((n_ + 63) / 64) {}

    std::pair<std::size_t, std::vector<std::size_t>> run() {
        if (n_ == 0) return {0, {}};
        Words p(words_, 0);
        for (std::size_t v = 0; v < n_; ++v) set_bit(p, v);
        current_.clear();
        best_ = 0;
        best_witness_.clear();
        expand(p);
        std::sort(best_witness_.begin(), best_witness_.end());
        return {best_, best_witness_};
    }

private:
    void expand(const Words& candidates) {
        if (!any(candidates)) {
            if (current_.size() > best_) {
                best_ = current_.size();
                best_witness_ = current_;
            }
            return;
        }
        // greedy colouring of the candidate set; vertices listed per class
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        greedy_colour(candidates, order, bound);
        Words p = candidates;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.size() + bound[idx] <= best_) return;
            const std::size_t v = order[idx];
            current_.push_back(v);
            Words next(words_);
            const auto row = g_.row(v);
            for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & row[w];
            expand(next);
            current_.pop_back();
            clear_bit(p, v);
        }
    }

    static std::size_t first_bit(const Words& w) {
        for (std::size_t wi = 0; wi < w.size(); ++wi)
            if (w[wi]) return wi * 64 + static_cast<std::size_t>(__builtin_ctzll(w[wi]));
        return static_cast<std::size_t>(-1);
    }

    // Sequential greedy colouring, ascending vertex id within each class;
    // output lists vertices class by class so bound[i] = colour(order[i]).
    void greedy_colour(const Words& candidates, std::vector<std::size_t>& order,
                       std::vector<std::size_t>& bound) const {
        Words uncoloured = candidates;
        std::size_t colour = 0;
        while (any(uncoloured)) {
            ++colour;
            Words eligible = uncoloured;
            while (any(eligible)) {
                const std::size_t v = first_bit(eligible);
                order.push_back(v);
                bound.push_back(colour);
                clear_bit(uncoloured, v);
                clear_bit(eligible, v);
                const auto row = g_.row(v);
                for (std::size_t k = 0; k < words_; ++k) eligible[k] &= ~row[k];
            }
        }
    }

    const SimpleGraph& g_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::size_t> current_;
    std::size_t best_ = 0;
    std::vector<std::size_t> best_witness_;
};

} // namespace detail

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness; // pairwise adjacent, ascending ids
};

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
inline CliqueResult clique_number_exact(const SimpleGraph& g,
                                        std::size_t cap = kDefaultCliqueCap) {
    if (g.vertex_count() > cap)
        throw CapExceeded("clique_number_exact: vertex count exceeds cap");
    detail::MaxCliqueSolver solver(g);
    auto [size, witness] = solver.run();
    return {size, std::move(witness)};
}

struct BipartiteResult {
    bool bipartite = false;
    std::vector<std::size_t> odd_cycle; // simple cycle of odd length when not
};

/// Two-colourability by BFS; returns an odd cycle witness on failure.
inline BipartiteResult is_bipartite(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<std::size_t> parent(n, 0), depth(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        parent[root] = root;
        std::vector<std::size_t> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    // walk both endpoints up to their common ancestor
                    std::vector<std::size_t> up_u{u}, up_v{v};
                    std::size_t a = u, b = v;
                    while (depth[a] > depth[b]) { a = parent[a]; up_u.push_back(a); }
                    while (depth[b] > depth[a]) { b = parent[b]; up_v.push_back(b); }
                    while (a != b) {
                        a = parent[a]; up_u.push_back(a);
                        b = parent[b]; up_v.push_back(b);
                    }
                    std::vector<std::size_t> cycle(up_u.begin(), up_u.end());
                    up_v.pop_back(); // drop the shared ancestor
                    std::reverse(up_v.begin(), up_v.end());
                    cycle.insert(cycle.end(), up_v.begin(), up_v.end());
                    return {false, std::move(cycle)};
                }
            }
        }
    }
    return {true, {}};
}

struct ChromaticResult {
    std::uint64_t chromatic = 0;
    Colouring witness;
};

namespace detail {

// DSATUR-driven exact k-colourability with the clique pre-coloured for
// symmetry breaking. Ties broken by ascending vertex id.
class KColourSolver {
public:
    KColourSolver(const SimpleGraph& g, std::uint64_t k, const std::vector<std::size_t>& clique)
        : g_(g), n_(g.vertex_count()), k_(k), colour_(n_, 0) {
        for (std::size_t i = 0; i < clique.size(); ++i) colour_[clique[i]] = i + 1;
        used_ = clique.size();
    }

    bool solve() {
        std::size_t uncoloured = 0;
        for (std::size_t v = 0; v < n_; ++v)
            if (colour_[v] == 0) ++uncoloured;
        return recurse(uncoloured);
    }

    const std::vector<std::uint64_t>& colours() const { return colour_; }

private:
    std::size_t saturation(std::size_t v) const {
        std::vector<bool> seen(k_ + 1, false);
        std::size_t s = 0;
        for (std::size_t u = 0; u < n_; ++u)
            if (colour_[u] && g_.adjacent(u, v) && !seen[colour_[u]]) {
                seen[colour_[u]] = true;
                ++s;
            }
        return s;
    }

    bool recurse(std::size_t uncoloured) {
        if (uncoloured == 0) return true;
        std::size_t pick = n_;
        std::size_t best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v]) continue;
            const std::size_t sat = saturation(v);
            std::size_t deg = 0;
            for (std::size_t u = 0; u < n_; ++u)
                if (g_.adjacent(u, v)) ++deg;
            if (pick == n_ || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::vector<bool> forbidden(k_ + 1, false);
        for (std::size_t u = 0; u < n_; ++u)
            if (colour_[u] && g_.adjacent(u, pick)) forbidden[colour_[u]] = true;
        // colours beyond used_+1 are interchangeable; trying one suffices
        const std::uint64_t limit = std::min<std::uint64_t>(k_, used_ + 1);
        for (std::uint64_t c = 1; c <= limit; ++c) {
            if (forbidden[c]) continue;
            colour_[pick] = c;
            const std::size_t prev_used = used_;
            used_ = std::max<std::size_t>(used_, c);
            if (recurse(uncoloured - 1)) return true;
            used_ = prev_used;
            colour_[pick] = 0;
        }
        return false;
    }

    const SimpleGraph& g_;
    std::size_t n_;
    std::uint64_t k_;
    std::vector<std::uint64_t> colour_;
    std::size_t used_ = 0;
};

} // namespace detail

/// Exact chromatic number: clique lower bound, then iterative deepening on k
/// with DSATUR branching. Returns a witness colouring.
inline ChromaticResult chromatic_number_exact(const SimpleGraph& g,
                                              std::size_t cap = kDefaultChromaticCap) {
    const std::size_t n = g.vertex_count();
    if (n > cap) throw CapExceeded("chromatic_number_exact: vertex count exceeds cap");
    if (n == 0) return {0, {{}, 0}};
    const CliqueResult clique = clique_number_exact(g, n);
    for (std::uint64_t k = std::max<std::size_t>(clique.size, 1);; ++k) {
        detail::KColourSolver solver(g, k, clique.witness);
        if (solver.solve()) {
            Colouring witness{solver.colours(), k};
            return {k, std::move(witness)};
        }
    }
}

} // namespace epg

#endif
