#ifndef EPGRAPH_GRAPH_HPP
#define EPGRAPH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "epgraph/errors.hpp"

namespace epg {

/// Finite undirected simple graph on vertices 0..n-1. Adjacency is a packed
/// symmetric bit matrix (row-major, 64-bit words), immutable in spirit:
/// build it, then query from as many threads as you like.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n)
        : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t word_count() const { return words_; }

    void add_edge(std::size_t u, std::size_t v) {
        check(u); check(v);
        if (u == v) throw InputError("add_edge: self-loops are not allowed");
        if (!adjacent(u, v)) ++edges_;
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    bool adjacent(std::size_t u, std::size_t v) const {
        check(u); check(v);
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
    }

    std::size_t edge_count() const { return edges_; }

    /// Adjacency row of u as packed words (tail bits are zero).
    std::span<const std::uint64_t> row(std::size_t u) const {
        return {bits_.data() + u * words_, words_};
    }

    /// Edges as (u,v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(edges_);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Optional per-vertex integer labels (element orders, primes, ...).
    void set_labels(std::vector<std::uint64_t> labels) {
        if (labels.size() != n_) throw InputError("set_labels: size mismatch");
        labels_ = std::move(labels);
    }
    bool has_labels() const { return !labels_.empty(); }
    std::uint64_t label(std::size_t v) const { check(v); return labels_.at(v); }

private:
    void check(std::size_t v) const {
        if (v >= n_) throw InputError("graph: vertex out of range");
    }

    std::size_t n_;
    std::size_t words_;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint64_t> labels_;
};

/// Total assignment of colours 1..palette_size to vertices.
struct Colouring {
    std::vector<std::uint64_t> colours; // colours[v] in 1..palette_size
    std::uint64_t palette_size = 0;
};

struct ProperCheck {
    bool proper = false;
    std::optional<std::pair<std::size_t, std::size_t>> violating_edge;
};

/// True iff no edge joins two equal colours; reports the first violating
/// edge (smallest u, then v) otherwise.
inline ProperCheck is_proper_colouring(const SimpleGraph& g, const Colouring& c) {
    if (c.colours.size() != g.vertex_count())
        throw InputError("is_proper_colouring: colouring does not cover the graph");
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (c.colours[v] < 1 || c.colours[v] > c.palette_size)
            throw InputError("is_proper_colouring: colour out of palette range");
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v) && c.colours[u] == c.colours[v])
                return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

/// Subgraph on vs (distinct, valid); vertex i of the result is vs[i].
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const std::size_t> vs) {
    std::vector<bool> used(g.vertex_count(), false);
    for (std::size_t v : vs) {
        if (v >= g.vertex_count()) throw InputError("induced_subgraph: vertex out of range");
        if (used[v]) throw InputError("induced_subgraph: duplicate vertex");
        used[v] = true;
    }
    SimpleGraph sub(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) sub.add_edge(i, j);
    if (g.has_labels()) {
        std::vector<std::uint64_t> labels;
        labels.reserve(vs.size());
        for (std::size_t v : vs) labels.push_back(g.label(v));
        sub.set_labels(std::move(labels));
    }
    return sub;
}

} // namespace epg

#endif
