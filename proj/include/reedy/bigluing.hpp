#pragma once

#include <memory>
#include <vector>

#include "reedy/category.hpp"
#include "reedy/classify.hpp"
#include "reedy/limits.hpp"
#include "reedy/profunctor.hpp"

namespace reedy {

// Data for gluing a new category D on top of a degreed category C:
//   u ∈ U(c, d) behaves like an arrow c → d   (U is a profunctor D ⇸ C, so
//                                              U.elements(c, d) indexes by the C object first),
//   w ∈ W(d, c) behaves like an arrow d → c   (W is a profunctor C ⇸ D),
//   alpha(w, u) is the composite c → d → c′ as a morphism of C.
class AbstractBigluingData {
 public:
  // alpha[w-global][u-global], with global element numbers as given by
  // u_global / w_global. Throws InvalidBigluingData when alpha is ill-typed,
  // not balanced over D or not natural over C.
  AbstractBigluingData(DegreedCategory C, std::shared_ptr<const FinCategory> D, Profunctor U, Profunctor W,
                       std::vector<std::vector<MorphismIndex>> alpha);

  [[nodiscard]] const DegreedCategory& base() const noexcept { return C_; }
  [[nodiscard]] const FinCategory& top() const noexcept { return *D_; }
  [[nodiscard]] const std::shared_ptr<const FinCategory>& shared_top() const noexcept { return D_; }
  [[nodiscard]] const Profunctor& U() const noexcept { return U_; }
  [[nodiscard]] const Profunctor& W() const noexcept { return W_; }
  [[nodiscard]] int u_global(ObjectIndex c, ObjectIndex d, int u) const { return u_start_[c * D_->object_count() + d] + u; }
  [[nodiscard]] int w_global(ObjectIndex d, ObjectIndex c, int w) const { return w_start_[d * C_.cat().object_count() + c] + w; }
  // alpha(w, u) for w ∈ W(d, c′), u ∈ U(c, d).
  [[nodiscard]] MorphismIndex alpha(ObjectIndex d, ObjectIndex c2, int w, ObjectIndex c, int u) const {
    return alpha_[w_global(d, c2, w)][u_global(c, d, u)];
  }
  [[nodiscard]] const std::vector<std::vector<MorphismIndex>>& alpha_table() const noexcept { return alpha_; }

  bool operator==(const AbstractBigluingData& o) const {
    return C_ == o.C_ && *D_ == *o.D_ && U_ == o.U_ && W_ == o.W_ && alpha_ == o.alpha_;
  }

 private:
  DegreedCategory C_;
  std::shared_ptr<const FinCategory> D_;
  Profunctor U_;
  Profunctor W_;
  std::vector<std::vector<MorphismIndex>> alpha_;
  std::vector<int> u_start_;
  std::vector<int> w_start_;
};

// The same data with the elements of every U(c, d) and W(d, c) sorted by
// token, so that two presentations of isomorphic data compare equal.
AbstractBigluingData canonical_form(const AbstractBigluingData& abd);

// The collage: objects of C and D, homs C(c, c′), U(c, d), W(d, c) and
// D(d, d′) ⊔ (U ⊗_C W)(d, d′). Tensor classes are named "<w;u>" after their
// least (w, u) by token. D objects get degree 1 + the largest degree of C.
// InvalidBigluingData if identifiers clash.
DegreedCategory collage(const AbstractBigluingData& abd);

// Recovers bigluing data from E with C the objects of degree < split_degree.
// NotACollage if the morphisms between the remaining objects that do not
// factor through C fail to form a subcategory, or if some morphism that does
// factor has a disconnected category of such factorizations.
AbstractBigluingData recognize_collage(const DegreedCategory& E, int split_degree);

// A diagram on the collage viewed as (M, N, phi, gamma).
struct BigluedDiagram {
  SetDiagram M;                                  // on C
  SetDiagram N;                                  // on D
  std::vector<Coend> tensor;                     // (U ⊗ M)(d)
  std::vector<std::vector<Components>> cotensor; // {W(d, −), M}
  std::vector<FinFunction> phi;                  // (U ⊗ M)(d) → N(d)
  std::vector<FinFunction> gamma;                // N(d) → {W(d, −), M}
  std::vector<FinFunction> alpha_bar;            // (U ⊗ M)(d) → {W(d, −), M}
};

// The tensor and cotensor objects and the canonical map between them for a
// diagram M on C.
struct GluingCorner {
  std::vector<Coend> tensor;
  std::vector<std::vector<Components>> cotensor;
  std::vector<FinFunction> alpha_bar;
};
GluingCorner gluing_corner(const AbstractBigluingData& abd, const SetDiagram& M,
                           long long max_search = SearchBudget::kDefaultCap);

// Splits X (a diagram on collage(abd)) and checks gamma∘phi = alpha_bar
// (InternalInvariantBroken otherwise).
BigluedDiagram biglue_split(const AbstractBigluingData& abd, const SetDiagram& X,
                            long long max_search = SearchBudget::kDefaultCap);

// Rebuilds the diagram on the collage. FactorizationMismatch if
// gamma∘phi ≠ alpha_bar; NotFunctorial if phi or gamma is not natural in d.
SetDiagram biglue_merge(const AbstractBigluingData& abd, const SetDiagram& M, const SetDiagram& N,
                        const std::vector<FinFunction>& phi, const std::vector<FinFunction>& gamma,
                        long long max_search = SearchBudget::kDefaultCap);

}  // namespace reedy
