#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satmon {

/// Ambient dimensions of two operands disagree.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exponent left the configured range (checked arithmetic, never wraps).
class ExponentOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// A closed formula was invoked outside its hypotheses.
class NotApplicable : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A configured size or step cap was hit; a resource guard, not a math result.
class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Process-wide resource limits. Read concurrently by the kernels; set them
/// before spawning work.
struct Caps {
  int exponent_cap = 1'000'000;
  std::size_t closure_node_cap = 1'000'000;
  int saturation_step_cap = 10'000;
};

Caps& caps();

} // namespace satmon
