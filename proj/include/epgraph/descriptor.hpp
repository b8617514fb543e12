#ifndef EPGRAPH_DESCRIPTOR_HPP
#define EPGRAPH_DESCRIPTOR_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "epgraph/group.hpp"

namespace epg {

struct GroupBuildOptions {
    std::uint64_t order_cap = kDefaultOrderCap;
};

/// Generator file: one permutation per line in cycle notation, e.g.
/// `(1,2)(3,4,5)`. Blank lines and `#` comments are ignored; an optional
/// `degree=k` line fixes the degree, otherwise it is inferred from the
/// largest moved point.
inline FiniteGroup load_permutation_group(const std::string& path,
                                          const GroupBuildOptions& opts = {}) {
    std::ifstream in(path);
    if (!in) throw InputError("perm: cannot open file: " + path);
    std::vector<std::string> lines;
    std::size_t degree = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        line = line.substr(first, last - first + 1);
        if (line.rfind("degree=", 0) == 0) {
            try {
                degree = std::stoul(line.substr(7));
            } catch (const std::exception&) {
                throw InputError("perm: bad degree header: " + line);
            }
            if (degree == 0) throw InputError("perm: degree must be positive");
            continue;
        }
        lines.push_back(line);
    }
    std::size_t inferred = 1;
    for (const std::string& text : lines)
        inferred = std::max(inferred, max_point_in_cycles(text));
    if (degree == 0) degree = inferred;
    if (inferred > degree) throw InputError("perm: point exceeds declared degree");
    std::vector<Permutation> gens;
    gens.reserve(lines.size());
    for (const std::string& text : lines) gens.push_back(parse_cycles(text, degree));
    return FiniteGroup::from_generators(gens, degree, "perm:" + path, opts.order_cap);
}

/// Cayley-table file: first token n, then n*n whitespace-separated ids.
inline FiniteGroup load_cayley_group(const std::string& path,
                                     const GroupBuildOptions& opts = {}) {
    std::ifstream in(path);
    if (!in) throw InputError("cayley: cannot open file: " + path);
    std::uint64_t n = 0;
    if (!(in >> n) || n == 0) throw InputError("cayley: missing or invalid order");
    std::vector<ElemId> table;
    table.reserve(n * n);
    std::uint64_t v = 0;
    while (in >> v) table.push_back(static_cast<ElemId>(v));
    return FiniteGroup::from_cayley_table(std::move(table), n, "cayley:" + path, opts.order_cap);
}

namespace detail {

inline void skip_spaces(std::string_view& sv) {
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
}

inline std::uint64_t take_uint(std::string_view& sv, const char* what) {
    skip_spaces(sv);
    std::size_t i = 0;
    while (i < sv.size() && std::isdigit(static_cast<unsigned char>(sv[i]))) ++i;
    if (i == 0) throw InputError(std::string("descriptor: expected number after ") + what);
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < i; ++k) {
        if (value > (std::uint64_t(-1) - (sv[k] - '0')) / 10)
            throw InputError("descriptor: number too large");
        value = value * 10 + static_cast<std::uint64_t>(sv[k] - '0');
    }
    sv.remove_prefix(i);
    return value;
}

// Consumes one descriptor from the front of sv. `nested` marks operands of
// a product, where file paths stop at ',' or ')'; at top level a path runs
// to the end of the string.
inline FiniteGroup parse_descriptor(std::string_view& sv, const GroupBuildOptions& opts, bool nested) {
    skip_spaces(sv);
    if (sv.empty()) throw InputError("descriptor: empty descriptor");
    if (sv.front() == '(') {
        std::size_t depth = 0, i = 0;
        for (; i < sv.size(); ++i) {
            if (sv[i] == '(') ++depth;
            else if (sv[i] == ')' && --depth == 0) break;
        }
        if (depth != 0) throw InputError("descriptor: unbalanced parentheses");
        std::string_view inner = sv.substr(1, i - 1);
        FiniteGroup g = parse_descriptor(inner, opts, false);
        skip_spaces(inner);
        if (!inner.empty()) throw InputError("descriptor: trailing text inside parentheses");
        sv.remove_prefix(i + 1);
        return g;
    }
    const std::size_t colon = sv.find(':');
    if (colon == std::string_view::npos)
        throw InputError("descriptor: expected kind:argument, got \"" + std::string(sv) + "\"");
    const std::string kind(sv.substr(0, colon));
    sv.remove_prefix(colon + 1);
    if (kind == "cyclic") return FiniteGroup::cyclic(take_uint(sv, "cyclic:"), opts.order_cap);
    if (kind == "dihedral") return FiniteGroup::dihedral(take_uint(sv, "dihedral:"), opts.order_cap);
    if (kind == "sym") return FiniteGroup::symmetric(take_uint(sv, "sym:"), opts.order_cap);
    if (kind == "alt") return FiniteGroup::alternating(take_uint(sv, "alt:"), opts.order_cap);
    if (kind == "perm" || kind == "cayley") {
        std::size_t end = sv.size();
        if (nested) {
            end = 0;
            while (end < sv.size() && sv[end] != ',' && sv[end] != ')') ++end;
        }
        const std::string path(sv.substr(0, end));
        sv.remove_prefix(end);
        if (path.empty()) throw InputError("descriptor: missing file path after " + kind + ":");
        return kind == "perm" ? load_permutation_group(path, opts)
                              : load_cayley_group(path, opts);
    }
    if (kind == "product") {
        FiniteGroup left = parse_descriptor(sv, opts, true);
        skip_spaces(sv);
        if (sv.empty() || sv.front() != ',')
            throw InputError("descriptor: product needs two comma-separated descriptors");
        sv.remove_prefix(1);
        FiniteGroup right = parse_descriptor(sv, opts, true);
        return FiniteGroup::direct_product(std::move(left), std::move(right), opts.order_cap);
    }
    throw InputError("descriptor: unknown group kind \"" + kind + "\"");
}

} // namespace detail

/// Builds a group from a descriptor: cyclic:n, dihedral:n (order 2n), sym:k,
/// alt:k, product:<spec>,<spec>, perm:<file>, cayley:<file>. Operands of a
/// product may be parenthesized.
inline FiniteGroup construct_group(const std::string& descriptor,
                                   const GroupBuildOptions& opts = {}) {
    std::string_view sv(descriptor);
    FiniteGroup g = detail::parse_descriptor(sv, opts, false);
    detail::skip_spaces(sv);
    if (!sv.empty())
        throw InputError("descriptor: trailing text: \"" + std::string(sv) + "\"");
    return g;
}

} // namespace epg

#endif
