#include "qlogic/errors.hpp"

#include <sstream>

namespace qlogic {

std::string LawViolation::describe() const {
  std::ostringstream os;
  os << law;
  if (!witness.empty()) {
    os << " [";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
    os << "]";
  }
  if (!message.empty()) os << ": " << message;
  return os.str();
}

namespace {

std::string join_violations(const std::vector<LawViolation>& violations) {
  std::string text = "law violation";
  if (violations.size() != 1) text += "s (" + std::to_string(violations.size()) + ")";
  for (const auto& v : violations) text += "\n  " + v.describe();
  return text;
}

}  // namespace

LawViolationError::LawViolationError(std::vector<LawViolation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace qlogic
