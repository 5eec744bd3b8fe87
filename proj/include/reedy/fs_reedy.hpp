#pragma once

#include <map>
#include <optional>
#include <vector>

#include "reedy/classify.hpp"

namespace reedy {

// A commuting square from f to f′: u: src f → src f′, v: tgt f → tgt f′ with
// v∘f = f′∘u.
struct Square {
  MorphismIndex f = kNoIndex;
  MorphismIndex f2 = kNoIndex;
  MorphismIndex u = kNoIndex;
  MorphismIndex v = kNoIndex;
  auto operator<=>(const Square&) const = default;
};

std::vector<Square> commuting_squares(const FinCategory& C);

// f = split[f].second ∘ split[f].first, together with a morphism between the
// middle objects for every commuting square.
struct FunctorialFactorization {
  std::vector<Factorization> split;
  std::map<Square, MorphismIndex> connector;
};

// For each f, the first factorization (in canonical order) with its first
// leg in `down` and its second in `up`; nullopt if some f has none.
std::optional<std::vector<Factorization>> canonical_split(const FinCategory& C, const std::vector<bool>& up,
                                                          const std::vector<bool>& down);

// Picks, for every square, the first morphism between middle objects that
// makes both halves commute; nullopt if some square has none. The result is
// not guaranteed to be functorial; see validate_functorial_factorization.
std::optional<FunctorialFactorization> derive_functorial_factorization(const FinCategory& C,
                                                                       std::vector<Factorization> split);

// Exhaustive check of the fs-Reedy data: up and down are wide subcategories,
// their nonidentity members strictly raise and lower degree, every split is
// typed and lies in down-then-up, every square has a connector satisfying both
// equations, identity squares get identities and pasted squares get composites.
CheckResult validate_functorial_factorization(const DegreedCategory& C, const std::vector<bool>& up,
                                              const std::vector<bool>& down, const FunctorialFactorization& ff);

// An isomorphism x ≅ target with `to` in down and `from` in up.
struct FsReplacement {
  ObjectIndex object = kNoIndex;
  ObjectIndex target = kNoIndex;
  MorphismIndex to = kNoIndex;
  MorphismIndex from = kNoIndex;
};

struct FsReduction {
  std::vector<ObjectIndex> objects;  // objects with a basic identity
  std::vector<FsReplacement> replacements;
  DegreedCategory reduced;           // the full subcategory on `objects`
  std::vector<MorphismIndex> morphism_origin;
  bool equivalence = false;          // every replacement is a verified inverse pair
  CheckResult reduced_reedy;         // classical check on the reduced category with its basic classes
  bool basic_within_supplied = false;  // basic classes of the reduced category lie in the supplied ones
  CheckResult supplied_definitional;   // classical check with the supplied classes restricted
};

// NotFsReedy if the data fails validation; IterationGuardExceeded if the
// replacement iteration does not stop.
FsReduction fs_reduce(const DegreedCategory& C, const std::vector<bool>& up, const std::vector<bool>& down,
                      const FunctorialFactorization& ff);

}  // namespace reedy
