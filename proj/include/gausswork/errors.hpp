#pragma once

#include <stdexcept>

namespace gausswork {

struct NonPositiveDefinite : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonPositiveDeterminant : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularConditioning : std::domain_error {
  using std::domain_error::domain_error;
};

struct Unphysical : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidModeSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidTriple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedModeCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gausswork
