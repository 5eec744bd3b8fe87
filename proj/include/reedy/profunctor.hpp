#pragma once

#include <memory>
#include <string>
#include <vector>

#include "reedy/category.hpp"

namespace reedy {

// Profunctor H: C ⇸ D given by sets H(d, c), a covariant left action of
// C-morphisms and a contravariant right action of D-morphisms. Elements of
// H(d, c) behave like arrows d → c.
class Profunctor {
 public:
  // elements[d * |C| + c] lists the tokens of H(d, c).
  // left[k][d] is the function H(d, src k) → H(d, tgt k) for a C-morphism k.
  // right[l][c] is the function H(tgt l, c) → H(src l, c) for a D-morphism l.
  // Validation failures throw InvalidProfunctor.
  Profunctor(std::shared_ptr<const FinCategory> source, std::shared_ptr<const FinCategory> target,
             std::vector<std::vector<std::string>> elements, std::vector<std::vector<std::vector<int>>> left,
             std::vector<std::vector<std::vector<int>>> right);

  [[nodiscard]] const FinCategory& source() const noexcept { return *source_; }
  [[nodiscard]] const FinCategory& target() const noexcept { return *target_; }
  [[nodiscard]] const std::vector<std::string>& elements(ObjectIndex d, ObjectIndex c) const {
    return elements_[static_cast<std::size_t>(d) * source_->object_count() + c];
  }
  [[nodiscard]] int size(ObjectIndex d, ObjectIndex c) const { return static_cast<int>(elements(d, c).size()); }
  // k·h for k: c → c′ in C and h ∈ H(d, c).
  [[nodiscard]] int act_left(MorphismIndex k, ObjectIndex d, int h) const { return left_[k][d][h]; }
  // h·l for h ∈ H(d, c) and l: d′ → d in D.
  [[nodiscard]] int act_right(int h, ObjectIndex c, MorphismIndex l) const { return right_[l][c][h]; }

  bool operator==(const Profunctor& o) const {
    return elements_ == o.elements_ && left_ == o.left_ && right_ == o.right_ && *source_ == *o.source_ &&
           *target_ == *o.target_;
  }

 private:
  std::shared_ptr<const FinCategory> source_;
  std::shared_ptr<const FinCategory> target_;
  std::vector<std::vector<std::string>> elements_;
  std::vector<std::vector<std::vector<int>>> left_;
  std::vector<std::vector<std::vector<int>>> right_;
};

}  // namespace reedy
