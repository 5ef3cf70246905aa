#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gqs {

enum class ErrorKind {
  InvalidArgument,
  AxiomViolation,
  GradingInconsistent,
  NotGraded,
  NotAdditive,
  NotLinear,
  NotGradedHom,
  Unsupported,
  Parse,
};

std::string toString(ErrorKind kind);

/// Error raised by constructors and decision procedures.
///
/// `witness()` holds a short human-readable certificate (the offending
/// element, pair or triple) when one exists, and is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }
  /// The message without the kind prefix and witness suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string witness_;
  std::string message_;
};

}  // namespace gqs
