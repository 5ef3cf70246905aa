#include "gqs/error.hpp"

namespace gqs {

std::string toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::AxiomViolation: return "axiom-violation";
    case ErrorKind::GradingInconsistent: return "grading-inconsistent";
    case ErrorKind::NotGraded: return "not-graded";
    case ErrorKind::NotAdditive: return "not-additive";
    case ErrorKind::NotLinear: return "not-linear";
    case ErrorKind::NotGradedHom: return "not-graded-hom";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, const std::string& witness) {
  std::string out{toString(kind)};
  out += ": ";
  out += message;
  if (!witness.empty()) {
    out += " (witness: ";
    out += witness;
    out += ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::string witness)
    : std::runtime_error(compose(kind, message, witness)), kind_(kind), witness_(std::move(witness)), message_(message) {}

}  // namespace gqs
