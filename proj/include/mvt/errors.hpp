#pragma once

#include <stdexcept>
#include <string>

namespace mvt {

/// Operands live over charts of different dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A field was evaluated outside the set where it is defined
/// (e.g. a non-positive bivector for Nambu-Goto).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Degenerate metric, singular Jacobian, tiny pivot.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A singular value fell too close to the rank cutoff to decide the rank.
class RankAmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input grid or constraint description.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mvt
