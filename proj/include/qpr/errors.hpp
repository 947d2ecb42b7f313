#pragma once

#include <stdexcept>
#include <string>

namespace qpr {

/// Precondition violated by an argument (size mismatch, out-of-range index,
/// unassigned parameter, non-prime modulus, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The quiver data does not fit together (path endpoints, unknown arrows).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A chart was requested at a Pluecker coordinate that vanishes.
class ChartError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpr
