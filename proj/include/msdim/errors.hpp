#pragma once

#include <stdexcept>
#include <string>

namespace msdim {

/// Input text or arrays that do not describe a valid object.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments that are well-formed but outside the domain of an operation
/// (a subgroup that is not contained in its parent, a zero polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded. This never signals a mathematical
/// failure; callers report the affected claim as unverified.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural hypothesis required by an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The simple-module search stopped before it could prove completeness.
class IncompletenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group builder spec could not be resolved.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msdim
