#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "reedy/classify.hpp"
#include "reedy/diagram.hpp"
#include "reedy/limits.hpp"

namespace reedy {

struct MapClass {
  bool is_L = false;
  bool is_R = false;
  bool operator==(const MapClass&) const = default;
};

// Injections on the left, surjections on the right.
MapClass base_classify(const FinFunction& f);

// X → X ⊔ Y → Y: the coproduct inclusion followed by (f, id).
std::pair<FinFunction, FinFunction> base_factorize(const FinFunction& f);

// Relative maps at one object x for m: A → B.
//   matching: A_x → M_xA ×_{M_xB} B_x
//   latching: L_xB ⊔_{L_xA} A_x → B_x
struct RelativeMaps {
  ObjectIndex object = kNoIndex;
  FinFunction matching;
  FinFunction latching;
};

struct MapClassification {
  MapClass cls;
  std::vector<RelativeMaps> relative;  // one per object
};

// NotDiscreteBistratified unless C is bistratified with discrete strata.
MapClassification reedy_classify_map(const DegreedCategory& C, const DiagramMap& m,
                                     long long max_search = SearchBudget::kDefaultCap);

// The same classes computed the other way round: m is a map of diagrams on
// opposite(C), read as a map of Set^op-valued diagrams on C in the opposite
// direction, classified against (surjections^op, injections^op). Boundary
// objects are computed as weighted limits and coends.
MapClass reedy_classify_dual(const DegreedCategory& C, const DiagramMap& m,
                             long long max_search = SearchBudget::kDefaultCap);

struct ProjectiveLCheck {
  bool holds = false;
  bool injective = false;
  bool complemented = false;
  RetractDecomposition decomposition;  // of the complement; meaningful once complemented
};

// Whether m is an objectwise injection whose complement is a subfunctor that
// splits into retracts of representables.
ProjectiveLCheck projective_L_check(const DiagramMap& m);

// NotBistratified unless C is bistratified. R is objectwise relative-matching
// surjectivity; L asks, for every degree, that the relative latching map over
// the stratum (basic level morphisms) pass projective_L_check.
MapClassification creedy_classify_map(const DegreedCategory& C, const DiagramMap& m,
                                      long long max_search = SearchBudget::kDefaultCap);

// m = r∘ℓ with ℓ in L and r in R, built degree by degree from the
// mapping-cylinder factorization of the corner maps. Elements of the middle
// diagram are tagged with their provenance. NotDiscreteBistratified as above.
struct MapFactorization {
  DiagramMap left;
  DiagramMap right;
};
MapFactorization reedy_factorize_map(const DegreedCategory& C, const DiagramMap& m,
                                     long long max_search = SearchBudget::kDefaultCap);

// A commuting square  A --top--> X
//                     |left      |right
//                     B --bottom-> Y
struct LiftingProblem {
  DiagramMap left;
  DiagramMap right;
  DiagramMap top;
  DiagramMap bottom;
};

// Throws NotNatural if the maps do not fit together or the square does not
// commute.
void validate_lifting_problem(const LiftingProblem& p);

// The first diagonal B → X (in canonical order) making both triangles
// commute, or nullopt. SizeGuardExceeded past max_search candidates.
std::optional<Components> solve_lifting(const LiftingProblem& p, long long max_search = SearchBudget::kDefaultCap);

// Plain finite functions, viewed as diagrams on the terminal category.
std::optional<FinFunction> solve_lifting(const FinFunction& left, const FinFunction& right, const FinFunction& top,
                                         const FinFunction& bottom, long long max_search = SearchBudget::kDefaultCap);

// Every commuting square from `left` to `right`; the visitor returns false to
// stop early.
void for_each_lifting_problem(const DiagramMap& left, const DiagramMap& right,
                              const std::function<bool(const LiftingProblem&)>& visit,
                              long long max_search = SearchBudget::kDefaultCap);

}  // namespace reedy
