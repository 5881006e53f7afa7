#include "toposbench/error.hpp"

#include <cstdlib>
#include <string>

#include "toposbench/budget.hpp"

namespace toposbench {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::FunctorViolation: return "FunctorViolation";
    case ErrorCode::NaturalityViolation: return "NaturalityViolation";
    case ErrorCode::NotActionClosed: return "NotActionClosed";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::UnboundGround: return "UnboundGround";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Budget Budget::from_environment() {
  Budget budget;
  if (const char* value = std::getenv("TOPOSBENCH_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long parsed = std::stoull(value, &used);
      if (used == std::string(value).size() && parsed > 0) {
        budget.stage_elements = parsed;
      }
    } catch (const std::exception&) {
    }
  }
  return budget;
}

}  // namespace toposbench
