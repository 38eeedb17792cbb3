#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Invalid user input: bad parameters, malformed stacks, bad indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A model was asked for something it cannot provide, e.g. the permittivity
/// of a perfect conductor.
class ModelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Vanishing denominator in an interface coefficient.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace casimir
