#ifndef EPGRAPH_GROUP_HPP
#define EPGRAPH_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epgraph/errors.hpp"
#include "epgraph/numtheory.hpp"
#include "epgraph/permutation.hpp"

namespace epg {

/// Dense element index; 0 is always the identity.
using ElemId = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = 50'000;

/// A finite group with enumerated elements. Construction fixes a dense,
/// deterministic enumeration with the identity at id 0; everything after
/// construction is read-only, so instances are safe to share across threads.
///
/// Parametric families (cyclic, dihedral, direct products) multiply by
/// formula in their natural coordinates; permutation groups store one image
/// per element, enumerated by breadth-first closure over the generators in
/// listed order; Cayley-table groups store the validated table.
class FiniteGroup {
public:
    enum class Backend { Cyclic, Dihedral, Product, Table, Permutation };

    static FiniteGroup cyclic(std::uint64_t n, std::uint64_t order_cap = kDefaultOrderCap) {
        if (n == 0) throw InputError("cyclic: n must be >= 1");
        if (n > order_cap) throw CapExceeded("cyclic: order exceeds cap");
        FiniteGroup g(Backend::Cyclic, n, "cyclic:" + std::to_string(n));
        g.modulus_ = n;
        return g;
    }

    /// Order 2n: rotations at ids 0..n-1 (id i = i-th rotation), reflections
    /// at ids n..2n-1 (id n+i = rotation i followed by the flip).
    static FiniteGroup dihedral(std::uint64_t n, std::uint64_t order_cap = kDefaultOrderCap) {
        if (n < 2) throw InputError("dihedral: n must be >= 2 (group order 2n)");
        if (2 * n > order_cap) throw CapExceeded("dihedral: order exceeds cap");
        FiniteGroup g(Backend::Dihedral, 2 * n, "dihedral:" + std::to_string(n));
        g.modulus_ = n;
        return g;
    }

    static FiniteGroup symmetric(std::uint64_t k, std::uint64_t order_cap = kDefaultOrderCap) {
        if (k == 0) throw InputError("sym: k must be >= 1");
        std::uint64_t order = 1;
        for (std::uint64_t i = 2; i <= k; ++i) {
            order *= i;
            if (order > order_cap) throw CapExceeded("sym: order exceeds cap");
        }
        std::vector<Permutation> gens;
        if (k >= 2) {
            Permutation t = identity_permutation(k);
            std::swap(t[0], t[1]);
            Permutation c(k);
            for (std::uint64_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % k);
            gens = {t, c};
        }
        return from_generators(gens, std::max<std::uint64_t>(k, 1),
                               "sym:" + std::to_string(k), order_cap);
    }

    static FiniteGroup alternating(std::uint64_t k, std::uint64_t order_cap = kDefaultOrderCap) {
        if (k == 0) throw InputError("alt: k must be >= 1");
        std::uint64_t order = 1;
        for (std::uint64_t i = 2; i <= k; ++i) {
            order *= i;
            if (order / (k >= 2 ? 2 : 1) > order_cap) throw CapExceeded("alt: order exceeds cap");
        }
        std::vector<Permutation> gens;
        if (k >= 3) {
            Permutation three = identity_permutation(k);
            three[0] = 1; three[1] = 2; three[2] = 0; // (1,2,3)
            gens.push_back(three);
            if (k > 3) {
                Permutation c = identity_permutation(k);
                if (k % 2 == 1) { // (1,2,...,k)
                    for (std::uint64_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % k);
                } else { // (2,3,...,k)
                    for (std::uint64_t i = 1; i < k; ++i) c[i] = static_cast<std::uint32_t>(i == k - 1 ? 1 : i + 1);
                }
                gens.push_back(c);
            }
        }
        return from_generators(gens, std::max<std::uint64_t>(k, 1),
                               "alt:" + std::to_string(k), order_cap);
    }

    /// Breadth-first closure of the generators: identity first, then by
    /// discovery order (each popped element is multiplied on the right by
    /// every generator in listed order).
    static FiniteGroup from_generators(const std::vector<Permutation>& generators,
                                       std::size_t degree, std::string name,
                                       std::uint64_t order_cap = kDefaultOrderCap) {
        if (degree == 0) degree = 1;
        for (const Permutation& g : generators) {
            if (g.size() != degree) throw InputError("from_generators: generator degree mismatch");
            if (!is_permutation(g)) throw InputError("from_generators: not a permutation");
        }
        FiniteGroup grp(Backend::Permutation, 0, std::move(name));
        grp.degree_ = degree;
        auto add = [&](const Permutation& p) -> std::pair<ElemId, bool> {
            auto it = grp.perm_index_.find(p);
            if (it != grp.perm_index_.end()) return {it->second, false};
            if (grp.order_ >= order_cap)
                throw CapExceeded("from_generators: closure exceeds order cap");
            const ElemId id = static_cast<ElemId>(grp.order_++);
            grp.images_.insert(grp.images_.end(), p.begin(), p.end());
            grp.perm_index_.emplace(p, id);
            return {id, true};
        };
        add(identity_permutation(degree));
        std::queue<ElemId> todo;
        todo.push(0);
        for (const Permutation& g : generators)
            if (auto [id, fresh] = add(g); fresh) todo.push(id);
        Permutation scratch(degree);
        while (!todo.empty()) {
            const ElemId u = todo.front();
            todo.pop();
            for (const Permutation& g : generators) {
                const std::uint32_t* img = grp.images_.data() + std::size_t{u} * degree;
                for (std::size_t i = 0; i < degree; ++i) scratch[i] = g[img[i]];
                if (auto [id, fresh] = add(scratch); fresh) todo.push(id);
            }
        }
        return grp;
    }

    /// Table must encode a genuine group with the identity at id 0; this is
    /// validated (associativity exhaustively for order <= 200, on 1000
    /// deterministic triples above that).
    static FiniteGroup from_cayley_table(std::vector<ElemId> table, std::uint64_t n,
                                         std::string name,
                                         std::uint64_t order_cap = kDefaultOrderCap) {
        if (n == 0) throw InputError("cayley: order must be >= 1");
        if (n > order_cap) throw CapExceeded("cayley: order exceeds cap");
        if (table.size() != n * n) throw InputError("cayley: table is not n x n");
        for (ElemId v : table)
            if (v >= n) throw InputError("cayley: entry out of range");
        for (std::uint64_t j = 0; j < n; ++j) {
            if (table[j] != j) throw InputError("cayley: id 0 is not a left identity");
            if (table[j * n] != j) throw InputError("cayley: id 0 is not a right identity");
        }
        std::vector<bool> seen(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::fill(seen.begin(), seen.end(), false);
            bool has_inverse = false;
            for (std::uint64_t j = 0; j < n; ++j) {
                const ElemId v = table[i * n + j];
                if (seen[v]) throw InputError("cayley: row is not a permutation");
                seen[v] = true;
                if (v == 0) has_inverse = true;
            }
            if (!has_inverse) throw InputError("cayley: element has no inverse");
            std::fill(seen.begin(), seen.end(), false);
            for (std::uint64_t j = 0; j < n; ++j) {
                const ElemId v = table[j * n + i];
                if (seen[v]) throw InputError("cayley: column is not a permutation");
                seen[v] = true;
            }
        }
        auto assoc = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
            return table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]];
        };
        if (n <= 200) {
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b)
                    for (std::uint64_t c = 0; c < n; ++c)
                        if (!assoc(a, b, c))
                            throw InputError("cayley: table is not associative");
        } else {
            detail::SplitMix64 rng(0x636179756c6579ull);
            for (int t = 0; t < 1000; ++t)
                if (!assoc(rng.next() % n, rng.next() % n, rng.next() % n))
                    throw InputError("cayley: table is not associative");
        }
        FiniteGroup g(Backend::Table, n, std::move(name));
        g.table_ = std::move(table);
        return g;
    }

    static FiniteGroup direct_product(FiniteGroup left, FiniteGroup right,
                                      std::uint64_t order_cap = kDefaultOrderCap) {
        std::uint64_t order = 0;
        if (__builtin_mul_overflow(left.order(), right.order(), &order) || order > order_cap)
            throw CapExceeded("product: order exceeds cap");
        FiniteGroup g(Backend::Product, order,
                      "product:" + left.name() + "," + right.name());
        g.left_ = std::make_shared<FiniteGroup>(std::move(left));
        g.right_ = std::make_shared<FiniteGroup>(std::move(right));
        return g;
    }

    std::uint64_t order() const { return order_; }
    const std::string& name() const { return name_; }
    Backend backend() const { return backend_; }
    bool permutation_backed() const { return backend_ == Backend::Permutation; }
    std::size_t degree() const { return degree_; }

    ElemId multiply(ElemId a, ElemId b) const {
        if (a >= order_ || b >= order_) throw InputError("multiply: element id out of range");
        switch (backend_) {
        case Backend::Cyclic:
            return static_cast<ElemId>((std::uint64_t{a} + b) % modulus_);
        case Backend::Dihedral: {
            const std::uint64_t n = modulus_;
            const bool fa = a >= n, fb = b >= n;
            const std::uint64_t ra = fa ? a - n : a, rb = fb ? b - n : b;
            const std::uint64_t r = (ra + (fa ? (n - rb) % n : rb)) % n;
            return static_cast<ElemId>(r + ((fa != fb) ? n : 0));
        }
        case Backend::Product: {
            const std::uint64_t m = right_->order();
            const ElemId l = left_->multiply(static_cast<ElemId>(a / m), static_cast<ElemId>(b / m));
            const ElemId r = right_->multiply(static_cast<ElemId>(a % m), static_cast<ElemId>(b % m));
            return static_cast<ElemId>(std::uint64_t{l} * m + r);
        }
        case Backend::Table:
            return table_[std::size_t{a} * order_ + b];
        case Backend::Permutation: {
            thread_local Permutation scratch;
            scratch.resize(degree_);
            const std::uint32_t* pa = images_.data() + std::size_t{a} * degree_;
            const std::uint32_t* pb = images_.data() + std::size_t{b} * degree_;
            for (std::size_t i = 0; i < degree_; ++i) scratch[i] = pb[pa[i]];
            return perm_index_.find(scratch)->second;
        }
        }
        throw std::logic_error("unreachable");
    }

    /// Least q >= 1 with x^q = identity. Parametric backends use the closed
    /// forms their coordinates give; table- and permutation-backed groups
    /// walk the powers.
    std::uint64_t element_order(ElemId x) const {
        if (x >= order_) throw InputError("element_order: element id out of range");
        switch (backend_) {
        case Backend::Cyclic:
            return modulus_ / std::gcd(modulus_, std::uint64_t{x});
        case Backend::Dihedral:
            if (x >= modulus_) return 2; // reflections are involutions
            return modulus_ / std::gcd(modulus_, std::uint64_t{x});
        case Backend::Product:
            return lcm_checked(left_->element_order(static_cast<ElemId>(x / right_->order())),
                               right_->element_order(static_cast<ElemId>(x % right_->order())));
        case Backend::Table:
        case Backend::Permutation: {
            std::uint64_t q = 1;
            for (ElemId y = x; y != 0; y = multiply(y, x)) ++q;
            return q;
        }
        }
        throw std::logic_error("unreachable");
    }

    /// One-line image of a permutation-backed element.
    Permutation permutation_of(ElemId x) const {
        if (backend_ != Backend::Permutation) throw InputError("permutation_of: group is not permutation-backed");
        if (x >= order_) throw InputError("permutation_of: element id out of range");
        return Permutation(images_.begin() + std::size_t{x} * degree_,
                           images_.begin() + (std::size_t{x} + 1) * degree_);
    }

    /// Id of a stored permutation, if present.
    std::optional<ElemId> find_element(const Permutation& p) const {
        if (backend_ != Backend::Permutation) throw InputError("find_element: group is not permutation-backed");
        auto it = perm_index_.find(p);
        if (it == perm_index_.end()) return std::nullopt;
        return it->second;
    }

private:
    FiniteGroup(Backend backend, std::uint64_t order, std::string name)
        : backend_(backend), order_(order), name_(std::move(name)) {}

    Backend backend_;
    std::uint64_t order_;
    std::string name_;
    std::uint64_t modulus_ = 0; // Cyclic: n; Dihedral: rotation count
    std::shared_ptr<const FiniteGroup> left_, right_;
    std::vector<ElemId> table_;
    std::size_t degree_ = 0;
    std::vector<std::uint32_t> images_; // order x degree, row per element
    std::unordered_map<Permutation, ElemId, PermutationHash> perm_index_;
};

inline std::uint64_t element_order(const FiniteGroup& g, ElemId x) {
    return g.element_order(x);
}

/// <x> with elements in power order: [x^0, x^1, ..., x^{q-1}].
struct CyclicSubgroup {
    ElemId generator;
    std::vector<ElemId> elements;
    std::uint64_t order() const { return elements.size(); }
};

inline CyclicSubgroup cyclic_closure(const FiniteGroup& g, ElemId x) {
    if (x >= g.order()) throw InputError("cyclic_closure: element id out of range");
    CyclicSubgroup c{x, {0}};
    for (ElemId y = x; y != 0; y = g.multiply(y, x)) c.elements.push_back(y);
    return c;
}

/// Smallest subset containing S and the identity that is closed under
/// multiplication, via breadth-first closure; returned ascending by id.
inline std::vector<ElemId> subgroup_closure(const FiniteGroup& g, std::span<const ElemId> s) {
    if (s.empty()) throw InputError("subgroup_closure: generating set is empty");
    for (ElemId x : s)
        if (x >= g.order()) throw InputError("subgroup_closure: element id out of range");
    std::vector<bool> seen(g.order(), false);
    std::vector<ElemId> members;
    std::queue<ElemId> todo;
    auto add = [&](ElemId x) {
        if (seen[x]) return;
        seen[x] = true;
        members.push_back(x);
        todo.push(x);
    };
    add(0);
    for (ElemId x : s) add(x);
    while (!todo.empty()) {
        const ElemId u = todo.front();
        todo.pop();
        for (ElemId x : s) add(g.multiply(u, x));
    }
    std::sort(members.begin(), members.end());
    return members;
}

namespace detail {

// Cyclicity of a set already known to be a subgroup: some member must have
// order equal to the subgroup size.
inline bool is_cyclic_subgroup_unchecked(const FiniteGroup& g, std::span<const ElemId> h) {
    const std::uint64_t size = h.size();
    for (ElemId x : h)
        if (g.element_order(x) == size) return true;
    return false;
}

} // namespace detail

/// True iff the subgroup H is cyclic. H must be closed under multiplication;
/// closure is verified and violations are an error.
inline bool is_cyclic_subset(const FiniteGroup& g, std::span<const ElemId> h) {
    if (h.empty()) throw InputError("is_cyclic_subset: set is empty");
    std::vector<bool> member(g.order(), false);
    for (ElemId x : h) {
        if (x >= g.order()) throw InputError("is_cyclic_subset: element id out of range");
        member[x] = true;
    }
    for (ElemId u : h)
        for (ElemId v : h)
            if (!member[g.multiply(u, v)])
                throw InputError("is_cyclic_subset: set is not closed under multiplication");
    return detail::is_cyclic_subgroup_unchecked(g, h);
}

/// Set of element orders, ascending.
inline std::vector<std::uint64_t> order_spectrum(const FiniteGroup& g) {
    std::vector<std::uint64_t> orders;
    orders.reserve(g.order());
    for (ElemId x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

inline std::uint64_t max_element_order(const FiniteGroup& g) {
    std::uint64_t best = 1;
    for (ElemId x = 0; x < g.order(); ++x) best = std::max(best, g.element_order(x));
    return best;
}

/// Among the phi(q) generators of C, the one with the smallest id. Depends
/// only on the element set of C, not on which generator produced it.
inline ElemId canonical_generator(const FiniteGroup& g, const CyclicSubgroup& c) {
    (void)g;
    const std::uint64_t q = c.elements.size();
    if (q == 1) return c.elements[0];
    ElemId best = c.generator;
    for (std::uint64_t k = 1; k < q; ++k)
        if (std::gcd(k, q) == 1) best = std::min(best, c.elements[k]);
    return best;
}

} // namespace epg

#endif
