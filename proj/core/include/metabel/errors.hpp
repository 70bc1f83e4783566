#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metabel {

/// Malformed knot-table input. `location` names the record or line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

enum class ValidationFailure {
  not_square,
  odd_size,
  not_unimodular,
  degenerate_alexander,  // det A(t) = 0 or a normalization invariant fails
  not_a_root_class,      // a modulus that does not divide the Alexander polynomial
};

const char* to_string(ValidationFailure kind);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFailure kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ValidationFailure kind() const { return kind_; }

 private:
  ValidationFailure kind_;
};

/// An internal consistency check failed (termination cap exceeded, exponent
/// sums disagreeing with multiplicities, ...). Always a bug or an input the
/// algorithms were not designed for; never silently ignored.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace metabel
