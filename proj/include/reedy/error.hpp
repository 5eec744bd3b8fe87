#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reedy {

enum class ErrorKind {
  // input validation
  MalformedInput,
  MissingIdentity,
  NonTotalComposition,
  UnitLawViolation,
  AssociativityViolation,
  DanglingReference,
  DuplicateIdentifier,
  IllTypedComposite,
  UnknownObject,
  UnknownMorphism,
  UnknownEntry,
  BoundsExceeded,
  // structural preconditions
  NotAFunctor,
  NotNatural,
  InvalidProfunctor,
  InvalidBigluingData,
  NotACollage,
  NotFunctorial,
  FactorizationMismatch,
  NotAlmostReedy,
  NotBistratified,
  NotDiscreteBistratified,
  NotFsReedy,
  // resource guards and internal failures
  SizeGuardExceeded,
  IterationGuardExceeded,
  InternalInvariantBroken,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Violation {
  ErrorKind kind;
  std::string message;
};

// Thrown by category validation; carries every violation that was found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// Shared budget for exhaustive searches; throws SizeGuardExceeded once spent.
class SearchBudget {
 public:
  static constexpr long long kDefaultCap = 1'000'000;

  explicit SearchBudget(long long cap = kDefaultCap) : cap_(cap) {}
  void spend(long long amount = 1) {
    used_ += amount;
    if (used_ > cap_) fail(ErrorKind::SizeGuardExceeded, "search exceeded the cap of " + std::to_string(cap_) + " candidate extensions");
  }
  [[nodiscard]] long long used() const noexcept { return used_; }
  [[nodiscard]] long long cap() const noexcept { return cap_; }

 private:
  long long cap_;
  long long used_ = 0;
};

}  // namespace reedy
