#ifndef EPGRAPH_ERRORS_HPP
#define EPGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epg {

/// Input that cannot be interpreted: bad descriptor syntax, malformed
/// files, out-of-range arguments.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource limit was hit (group order cap, graph cap,
/// solver cap, factorisation bound). Distinct from InputError so callers
/// can map it to a different exit status.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace epg

#endif
