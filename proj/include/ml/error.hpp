#pragma once

#include <stdexcept>
#include <string>

namespace ml {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands of different widths were mixed.
struct WidthError : Error {
  using Error::Error;
};

// Malformed textual input (bitstrings, form grammar, config files).
struct ParseError : Error {
  using Error::Error;
};

// An operation would materialize a universe (or enumerate sub-forms)
// above the configured limit.
struct CapacityError : Error {
  using Error::Error;
};

// A data sequence violates the contract of the consumer
// (contradictory labels, negative data fed to a positive-only rule, ...).
struct DataError : Error {
  using Error::Error;
};

// A precondition that is not about widths or capacity was violated.
struct ContractError : Error {
  using Error::Error;
};

}  // namespace ml
