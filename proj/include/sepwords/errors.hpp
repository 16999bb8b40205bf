#pragma once

#include <stdexcept>
#include <string>

namespace sepwords {

// Thrown when a search that the underlying theorems guarantee to succeed
// comes up empty, or an internal consistency check fails. Callers must not
// swallow this: it signals an implementation bug, not bad input.
class ContradictionError : public std::logic_error {
public:
    explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

} // namespace sepwords
