#pragma once

#include <stdexcept>

namespace bchresum {

// Incompatible operands or invalid run parameters (alphabet/degree mismatch,
// N < D for verification, ...).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace bchresum
