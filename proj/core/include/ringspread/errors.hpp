#ifndef RINGSPREAD_ERRORS_HPP
#define RINGSPREAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringspread {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A builder or operation parameter lies outside its admissible range.
class ParameterRangeError : public Error {
 public:
  using Error::Error;
};

/// The requested state has (numerically) zero norm.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Coefficients do not satisfy sum |c_m|^2 = 1 and rescaling was not requested.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Overflow, non-finite integrand and similar floating-point failures.
class NumericalDomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition that can only be spot-checked failed.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed state-spec document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringspread

#endif  // RINGSPREAD_ERRORS_HPP
