#ifndef EPGRAPH_PERMUTATION_HPP
#define EPGRAPH_PERMUTATION_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "epgraph/errors.hpp"

namespace epg {

/// Permutation of {0..degree-1} in one-line image form: image(i) = images[i].
/// Cycle notation in input/output is 1-based, as usual.
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t degree) {
    Permutation p(degree);
    for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
    return p;
}

/// Composition "apply a, then b": result(i) = b[a[i]].
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::uint32_t v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

/// Parses cycle notation like "(1,2)(3,4,5)" or "(1 2)(3 4 5)"; "()" and "e"
/// denote the identity. Points are 1-based in the text. The result acts on
/// {0..degree-1}; degree must be at least the largest mentioned point.
inline Permutation parse_cycles(const std::string& text, std::size_t degree) {
    Permutation p = identity_permutation(degree);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        skip_ws();
        if (i != text.size()) throw InputError("parse_cycles: trailing text after identity");
        return p;
    }
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw InputError("parse_cycles: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<std::uint32_t> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw InputError("parse_cycles: expected point in \"" + text + "\"");
            const unsigned long v = std::stoul(text.substr(start, i - start));
            if (v == 0 || v > degree)
                throw InputError("parse_cycles: point out of range in \"" + text + "\"");
            cycle.push_back(static_cast<std::uint32_t>(v - 1));
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        }
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
            if (p[cycle[k]] != cycle[k])
                throw InputError("parse_cycles: point repeated in \"" + text + "\"");
            p[cycle[k]] = cycle[k + 1];
        }
        if (cycle.size() >= 2) {
            if (p[cycle.back()] != cycle.back())
                throw InputError("parse_cycles: point repeated in \"" + text + "\"");
            p[cycle.back()] = cycle.front();
        }
        skip_ws();
    }
    return p;
}

/// Largest 1-based point mentioned in a cycle-notation string (0 if none).
inline std::size_t max_point_in_cycles(const std::string& text) {
    std::size_t largest = 0, i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            largest = std::max(largest, static_cast<std::size_t>(std::stoul(text.substr(start, i - start))));
        } else {
            ++i;
        }
    }
    return largest;
}

/// Canonical cycle notation: cycles sorted by smallest moved point, each
/// cycle starting at its smallest point; identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            done[j] = true;
            j = p[j];
            first = false;
        } while (j != i);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (std::uint32_t v : p) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace epg

#endif
