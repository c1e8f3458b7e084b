#include "dforge/error.hpp"

namespace dforge {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonSemialgebraic: return "NonSemialgebraic";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthUnderflow: return "LengthUnderflow";
    case ErrorCode::InsufficientIndices: return "InsufficientIndices";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& what)
    : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
      position_(position) {}

UnsupportedDegree::UnsupportedDegree(std::size_t variable, unsigned degree,
                                     const std::string& context)
    : Error(ErrorCode::UnsupportedDegree,
            "variable x" + std::to_string(variable) + " occurs with degree " +
                std::to_string(degree) + " (at most 2 supported)" +
                (context.empty() ? std::string{} : "; " + context)),
      variable_(variable),
      degree_(degree) {}

}  // namespace dforge
