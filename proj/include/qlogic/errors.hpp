#ifndef QLOGIC_ERRORS_HPP
#define QLOGIC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qlogic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain/codomain of two morphisms do not line up.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Operation mixes FHilb and Rel values.
class BackendMismatchError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `context` names the offending field or line.
class ParseError : public Error {
 public:
  ParseError(std::string context, const std::string& message)
      : Error(context.empty() ? message : context + ": " + message),
        context_(std::move(context)),
        message_(message) {}

  const std::string& context() const { return context_; }
  const std::string& message() const { return message_; }

 private:
  std::string context_;
  std::string message_;
};

/// One violated law together with the elements that witness the failure.
struct LawViolation {
  std::string law;
  std::vector<std::string> witness;
  std::string message;

  std::string describe() const;
};

/// Raised when a structure fails one or more of its defining laws.
class LawViolationError : public Error {
 public:
  explicit LawViolationError(std::vector<LawViolation> violations);

  const std::vector<LawViolation>& violations() const { return violations_; }

 private:
  std::vector<LawViolation> violations_;
};

}  // namespace qlogic

#endif  // QLOGIC_ERRORS_HPP
