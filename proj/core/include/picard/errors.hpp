#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace picard {

/// Two exact scalars from different coefficient domains were combined.
struct DomainMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix expected to preserve the Hermitian form does not.
struct NotIsometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The characteristic polynomial has a factor that does not split over the
/// working quadratic field; the exact eigenvalue path is unavailable.
struct IrreducibleFactorError : std::runtime_error {
  explicit IrreducibleFactorError(std::string factor)
      : std::runtime_error("irreducible factor over the coefficient field: " + factor),
        factor_text(std::move(factor)) {}
  std::string factor_text;
};

/// A right-eigenvalue class of a quaternionic matrix lies outside every
/// single quadratic extension of Q reachable by the exact path.
struct CandidateOutsideQuadraticFieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in a presentation, matrix or scalar literal.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ")"
                                : msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace picard
