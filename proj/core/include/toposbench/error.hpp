#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toposbench {

enum class ErrorCode {
  MissingComposite,
  AssociativityViolation,
  IdentityViolation,
  FunctorViolation,
  NaturalityViolation,
  NotActionClosed,
  BaseMismatch,
  SizeBudgetExceeded,
  SyntaxError,
  UnknownSymbol,
  TypeMismatch,
  UnboundGround,
  UnknownObject,
  EquivarianceViolation,
  MalformedInput,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry a byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace toposbench
