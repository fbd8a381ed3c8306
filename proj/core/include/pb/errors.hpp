#ifndef PB_ERRORS_HPP
#define PB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pb {

/// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two field elements or matrices with different moduli were combined.
struct FieldMismatchError : Error {
  using Error::Error;
};

/// Division by zero in GF(q).
struct DivisionByZeroError : Error {
  using Error::Error;
};

/// Incompatible shapes in a matrix/vector operation.
struct DimensionError : Error {
  using Error::Error;
};

/// Invalid parameter combination (bad n/k/t/q, non-prime modulus, ...).
struct ParameterError : Error {
  using Error::Error;
};

/// A repair scheme failed verification. `condition` names the violated
/// requirement: "not-dual", "support-violation", "rank-deficient-at-i*",
/// "not-perfect-bandwidth" or "illegal-column".
struct VerifyError : Error {
  VerifyError(std::string cond, const std::string& msg)
      : Error(cond + ": " + msg), condition(std::move(cond)) {}
  std::string condition;
};

/// Supplied node rows are not the restriction of any codeword.
struct InconsistentRowsError : Error {
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

/// A code or scheme file failed to parse or validate.
struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace pb

#endif
