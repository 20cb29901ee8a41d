#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrowgraph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept { return "error"; }
};

/// Malformed function text. `offset` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const char* code() const noexcept override { return "syntax_error"; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Errors where the input is well formed but the mathematics does not apply.
class MathError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "math_error"; }
};

#define ARROWGRAPH_MATH_ERROR(Name, Code)                          \
  class Name : public MathError {                                  \
   public:                                                         \
    using MathError::MathError;                                    \
    const char* code() const noexcept override { return Code; }    \
  };

ARROWGRAPH_MATH_ERROR(DomainError, "domain_error")
ARROWGRAPH_MATH_ERROR(NotRational, "not_rational")
ARROWGRAPH_MATH_ERROR(SingularParameter, "singular_parameter")
ARROWGRAPH_MATH_ERROR(InvalidFocus, "invalid_focus")
ARROWGRAPH_MATH_ERROR(EmptyRange, "empty_range")
ARROWGRAPH_MATH_ERROR(DegenerateParametrization, "degenerate_parametrization")
ARROWGRAPH_MATH_ERROR(DegenerateFamily, "degenerate_family")
ARROWGRAPH_MATH_ERROR(NotAConic, "not_a_conic")
ARROWGRAPH_MATH_ERROR(DegenerateResult, "degenerate_result")
ARROWGRAPH_MATH_ERROR(InexactDivision, "inexact_division")

#undef ARROWGRAPH_MATH_ERROR

}  // namespace arrowgraph
