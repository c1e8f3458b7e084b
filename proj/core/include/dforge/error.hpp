#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dforge {

/// Domain error categories. The name of each value is what the CLI prints on
/// the diagnostic stream, so keep them stable.
enum class ErrorCode {
  ArityMismatch,
  SyntaxError,
  NonSemialgebraic,
  UnsupportedDegree,
  OutOfRange,
  IndexOutOfRange,
  LengthUnderflow,
  InsufficientIndices,
  SearchBoundExceeded,
  InvalidArgument,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedDegree : public Error {
 public:
  UnsupportedDegree(std::size_t variable, unsigned degree, const std::string& context = {});
  std::size_t variable() const noexcept { return variable_; }
  unsigned degree() const noexcept { return degree_; }

 private:
  std::size_t variable_;
  unsigned degree_;
};

}  // namespace dforge
