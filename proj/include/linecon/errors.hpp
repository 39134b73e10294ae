#pragma once

#include <stdexcept>

namespace linecon {

/// An argument lies outside the domain of an operation (bad index, size
/// mismatch, unmet precondition on input shape).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An input that should have satisfied a structural contract did not, or an
/// internal consistency check failed. Seeing one of these from a sweep means
/// either a caller bug or a wrong closed form.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// The operation has no value for this input (e.g. frequency of Total).
struct UndefinedOperation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Malformed textual or JSON input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace linecon
