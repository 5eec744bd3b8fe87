#include "reedy/error.hpp"

namespace reedy {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::NonTotalComposition: return "NonTotalComposition";
    case ErrorKind::UnitLawViolation: return "UnitLawViolation";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::IllTypedComposite: return "IllTypedComposite";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownMorphism: return "UnknownMorphism";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::InvalidProfunctor: return "InvalidProfunctor";
    case ErrorKind::InvalidBigluingData: return "InvalidBigluingData";
    case ErrorKind::NotACollage: return "NotACollage";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::NotAlmostReedy: return "NotAlmostReedy";
    case ErrorKind::NotBistratified: return "NotBistratified";
    case ErrorKind::NotDiscreteBistratified: return "NotDiscreteBistratified";
    case ErrorKind::NotFsReedy: return "NotFsReedy";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::IterationGuardExceeded: return "IterationGuardExceeded";
    case ErrorKind::InternalInvariantBroken: return "InternalInvariantBroken";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  if (violations.empty()) return "invalid category";
  std::string out = violations.front().message;
  if (violations.size() > 1) out += " (and " + std::to_string(violations.size() - 1) + " more)";
  return out;
}

ErrorKind first_kind(const std::vector<Violation>& violations) {
  return violations.empty() ? ErrorKind::MalformedInput : violations.front().kind;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(first_kind(violations), summarize(violations)), violations_(std::move(violations)) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace reedy
