#pragma once

#include <stdexcept>
#include <string>

namespace cordial {

enum class ErrorCode {
  invalid_argument,
  parse,
  size_mismatch,
  not_caterpillar,
  precondition,
  budget_exhausted,
  internal,
  io,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cordial
