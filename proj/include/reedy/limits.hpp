#pragma once

#include <map>
#include <vector>

#include "reedy/diagram.hpp"
#include "reedy/factorization.hpp"

namespace reedy {

// Natural transformations W ⇒ X, in lexicographic order of their components.
std::vector<Components> weighted_limit(const SetDiagram& W, const SetDiagram& X,
                                       long long max_search = SearchBudget::kDefaultCap);

// One summand element (u, a) with u ∈ U(c), a ∈ X(c).
struct CoendElement {
  ObjectIndex object = kNoIndex;
  int weight = 0;
  int value = 0;
  auto operator<=>(const CoendElement&) const = default;
};

// A quotient of a finite list of elements: class_of per element and the
// least element of every class, classes ordered by that representative.
struct Quotient {
  std::vector<int> class_of;
  std::vector<int> representative;
  [[nodiscard]] int class_count() const noexcept { return static_cast<int>(representative.size()); }
};

// Union-find quotient of n elements by the given pairs, least index as root.
Quotient quotient(int n, const std::vector<std::pair<int, int>>& identify);

struct Coend {
  std::vector<CoendElement> elements;  // ordered by (object, weight, value)
  Quotient classes;
};

// ∫^c U(c) × X(c) for U a diagram on opposite(C) and X on C, identifying
// (u·k, a) with (u, k·a). Morphisms of the two shapes are matched by id.
Coend weighted_colimit(const SetDiagram& U, const SetDiagram& X);

// The full subcategory of objects of degree < δ with index translations.
struct LowerPart {
  int delta = 0;
  Subcategory sub;
  std::vector<ObjectIndex> local_object;      // per C object, kNoIndex outside
  std::vector<MorphismIndex> local_morphism;  // per C morphism, kNoIndex outside
};
LowerPart lower_part(const DegreedCategory& C, int delta);

// Compatible families (a_f) indexed by the morphisms f: x → z with
// deg z < deg x, a_f ∈ X(z).
struct MatchingObject {
  ObjectIndex x = kNoIndex;
  std::vector<MorphismIndex> index;
  std::vector<std::vector<int>> families;
  FinFunction cone;  // X(x) → families, a ↦ (X(f)(a))_f; empty domain if not computed

  [[nodiscard]] int size() const noexcept { return static_cast<int>(families.size()); }
  [[nodiscard]] int find(const std::vector<int>& family) const;  // kNoIndex if absent
  [[nodiscard]] int slot(MorphismIndex f) const;                 // kNoIndex if absent

 private:
  friend MatchingObject matching_from_lower(const DegreedCategory&, ObjectIndex, const LowerPart&, const SetDiagram&,
                                            SearchBudget&);
  std::map<std::vector<int>, int> lookup_;
};

// Classes [f, a] with f: z → x, deg z < deg x, a ∈ X(z), modulo
// (f∘k, a) ∼ (f, X(k)(a)).
struct LatchingObject {
  ObjectIndex x = kNoIndex;
  std::vector<MorphismIndex> index;
  std::vector<std::pair<int, int>> pairs;  // (slot, element), slot-major
  Quotient classes;
  FinFunction cocone;  // classes → X(x); empty codomain if not computed

  [[nodiscard]] int size() const noexcept { return classes.class_count(); }
  [[nodiscard]] int slot(MorphismIndex f) const;
  // The class of (f, a).
  [[nodiscard]] int class_of(MorphismIndex f, int a) const;

 private:
  friend LatchingObject latching_from_lower(const DegreedCategory&, ObjectIndex, const LowerPart&, const SetDiagram&);
  std::vector<int> offset_;  // first pair of every slot
};

// Both objects computed from X on the lower part only (no cone / cocone).
MatchingObject matching_from_lower(const DegreedCategory& C, ObjectIndex x, const LowerPart& low,
                                   const SetDiagram& X_low, SearchBudget& budget);
LatchingObject latching_from_lower(const DegreedCategory& C, ObjectIndex x, const LowerPart& low,
                                   const SetDiagram& X_low);

// The matching object with its cone. The conical limit is checked against
// the limit weighted by the boundary hom ∂C(x, −); a disagreement raises
// InternalInvariantBroken.
MatchingObject matching_object(const DegreedCategory& C, ObjectIndex x, const SetDiagram& X,
                               long long max_search = SearchBudget::kDefaultCap);

// The latching object with its cocone, checked against the coend weighted by
// ∂C(−, x) and against the matching index of opposite(C) at x.
LatchingObject latching_object(const DegreedCategory& C, ObjectIndex x, const SetDiagram& X);

// Limit of X over the graph whose vertices are the nonidentity basic
// non-raising morphisms out of x and whose edges are the commuting triangles
// formed with such morphisms.
std::vector<std::vector<int>> graph_limit(const DegreedCategory& C, ObjectIndex x, const SetDiagram& X,
                                          long long max_search = SearchBudget::kDefaultCap);

}  // namespace reedy
