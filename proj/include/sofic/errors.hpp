#ifndef SOFIC_ERRORS_HPP_
#define SOFIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sofic {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (size mismatch, unknown vertex,
// incompatible handles, wrong convention).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size/step/node budget was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Structural validation failed (non-associative table, bad rewrite rule,
// malformed input data).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A stated precondition of a construction does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input text (JSON, fractions, element strings) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sofic

#endif  // SOFIC_ERRORS_HPP_
