#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Bad user input: malformed degrees, composite "prime", hypothesis violations.
struct argument_error : std::invalid_argument {
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Work refused because it would exceed a configured cap (basis size, dense
// area, 64-bit counting range).  The message names the required size.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant.  Reaching this is a bug, not a user error.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace koszul
