#pragma once

#include <stdexcept>
#include <string>

namespace schurkit {

// Raised when an enumeration, solver or table would exceed a configured bound.
// The message names the bound that was hit.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input violates a documented precondition of an operation.
class ContractError : public std::invalid_argument {
  public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised on malformed user-facing input: group specs, presentation syntax, files.
class ParseError : public std::invalid_argument {
  public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by the checked fixed-width integer mode when a value no longer fits.
class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schurkit
