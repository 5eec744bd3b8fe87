#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "reedy/category.hpp"

namespace reedy {

// A function between finite sets {0..domain-1} → {0..codomain-1}.
struct FinFunction {
  int codomain = 0;
  std::vector<int> image;

  [[nodiscard]] int domain() const noexcept { return static_cast<int>(image.size()); }
  [[nodiscard]] int operator()(int a) const { return image[a]; }
  [[nodiscard]] bool injective() const;
  [[nodiscard]] bool surjective() const;
  bool operator==(const FinFunction&) const = default;

  static FinFunction identity(int n);
};

// g after f.
FinFunction compose(const FinFunction& g, const FinFunction& f);

// A functor from a finite category to finite sets, with named elements.
class SetDiagram {
 public:
  // Checks that every map is well-typed and that the assignment is functorial
  // (NotAFunctor otherwise).
  SetDiagram(std::shared_ptr<const FinCategory> shape, std::vector<std::vector<std::string>> sets,
             std::vector<std::vector<int>> maps);

  [[nodiscard]] const FinCategory& shape() const noexcept { return *shape_; }
  [[nodiscard]] const std::shared_ptr<const FinCategory>& shared_shape() const noexcept { return shape_; }
  [[nodiscard]] int size(ObjectIndex x) const { return static_cast<int>(sets_[x].size()); }
  [[nodiscard]] const std::vector<std::string>& elements(ObjectIndex x) const { return sets_[x]; }
  [[nodiscard]] const std::vector<int>& map(MorphismIndex f) const { return maps_[f]; }
  [[nodiscard]] int apply(MorphismIndex f, int a) const { return maps_[f][a]; }
  [[nodiscard]] FinFunction function(MorphismIndex f) const;
  // Element lookup by name; kNoIndex if absent.
  [[nodiscard]] int find_element(ObjectIndex x, std::string_view name) const;

  bool operator==(const SetDiagram& o) const {
    return sets_ == o.sets_ && maps_ == o.maps_ && *shape_ == *o.shape_;
  }

 private:
  std::shared_ptr<const FinCategory> shape_;
  std::vector<std::vector<std::string>> sets_;
  std::vector<std::vector<int>> maps_;
};

// Natural transformation between diagrams of the same shape.
class DiagramMap {
 public:
  // Checks typing and naturality (NotNatural otherwise).
  DiagramMap(SetDiagram source, SetDiagram target, std::vector<std::vector<int>> components);

  [[nodiscard]] const SetDiagram& source() const noexcept { return source_; }
  [[nodiscard]] const SetDiagram& target() const noexcept { return target_; }
  [[nodiscard]] const FinCategory& shape() const noexcept { return source_.shape(); }
  [[nodiscard]] const std::vector<int>& component(ObjectIndex x) const { return components_[x]; }
  [[nodiscard]] const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  [[nodiscard]] FinFunction function(ObjectIndex x) const;

  bool operator==(const DiagramMap&) const = default;

 private:
  SetDiagram source_;
  SetDiagram target_;
  std::vector<std::vector<int>> components_;
};

DiagramMap identity_map(const SetDiagram& X);
// g after f.
DiagramMap compose(const DiagramMap& g, const DiagramMap& f);

SetDiagram constant_diagram(std::shared_ptr<const FinCategory> shape, int size);
// hom(c, −) on C; elements are named by morphism id.
SetDiagram representable(std::shared_ptr<const FinCategory> C, ObjectIndex c);
// hom(−, c) as a diagram on `op`, which must be opposite(C).
SetDiagram corepresentable(const FinCategory& C, std::shared_ptr<const FinCategory> op, ObjectIndex c);
// Restriction along the inclusion of a subcategory.
SetDiagram restrict(const SetDiagram& X, const Subcategory& sub);

// Components of a natural transformation, indexed [object][element].
using Components = std::vector<std::vector<int>>;

struct NaturalSearchOptions {
  // Restricts the value at (object, element) when set.
  std::function<bool(ObjectIndex, int, int)> allowed;
  // Tries candidate values in random order instead of ascending order.
  std::mt19937_64* shuffle = nullptr;
  // Charged once per candidate value tried.
  SearchBudget* budget = nullptr;
};

// Enumerates the natural transformations A ⇒ B by backtracking over objects
// and elements in index order, propagating the values forced along every
// morphism. The visitor returns false to stop the search.
void search_natural_maps(const SetDiagram& A, const SetDiagram& B, const NaturalSearchOptions& options,
                         const std::function<bool(const Components&)>& visit);

}  // namespace reedy
