#ifndef CELLCALC_ERRORS_HPP
#define CELLCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cellcalc {

// Input that cannot be parsed or refers to unknown names/indices.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated precondition does not hold for otherwise well-formed input.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidRelation : InputError {
  using InputError::InputError;
};

struct InvalidAlgebra : InputError {
  using InputError::InputError;
};

struct SubsetOutOfRange : InputError {
  using InputError::InputError;
};

struct NotFiniteDimensional : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotSuperdiagonal : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct ColumnNotPresent : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotACore : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NoGreatestElement : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct SizeMismatch : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotConformant : PreconditionError {
  using PreconditionError::PreconditionError;
};

}  // namespace cellcalc

#endif
