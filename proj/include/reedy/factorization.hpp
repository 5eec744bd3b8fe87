#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reedy/category.hpp"

namespace reedy {

// f = second ∘ first, passing through `mid`.
struct Factorization {
  MorphismIndex first = kNoIndex;
  MorphismIndex second = kNoIndex;
  ObjectIndex mid = kNoIndex;
  auto operator<=>(const Factorization&) const = default;
};

struct FactorizationEdge {
  int from = 0;
  int to = 0;
  MorphismIndex connector = kNoIndex;
};

// Vertices are factorizations of one morphism; an edge from u to v carries a
// connector k with v.first = k∘u.first and u.second = v.second∘k.
struct FactorizationGraph {
  MorphismIndex morphism = kNoIndex;
  std::vector<Factorization> vertices;
  std::vector<FactorizationEdge> edges;
};

struct ZigzagStep {
  int edge = 0;
  bool forward = true;  // traversed from `from` to `to`
};

// Connected components under zigzag connectivity, with a spanning forest.
class FactorizationComponents {
 public:
  explicit FactorizationComponents(FactorizationGraph graph);

  [[nodiscard]] const FactorizationGraph& graph() const noexcept { return graph_; }
  [[nodiscard]] const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  [[nodiscard]] int component_of(int vertex) const { return component_[vertex]; }
  [[nodiscard]] std::size_t count() const noexcept { return components_.size(); }
  // The empty graph is not connected.
  [[nodiscard]] bool connected() const noexcept { return components_.size() == 1; }
  // Explicit zigzag between two vertices of one component (nullopt otherwise).
  [[nodiscard]] std::optional<std::vector<ZigzagStep>> path(int a, int b) const;

 private:
  FactorizationGraph graph_;
  std::vector<int> component_;
  std::vector<std::vector<int>> components_;
  std::vector<int> parent_;       // spanning-forest parent vertex, -1 at roots
  std::vector<int> parent_edge_;  // edge joining a vertex to its parent
  std::vector<int> depth_;
};

// Every factorization of f, in canonical (mid, first, second) order.
std::vector<Factorization> all_factorizations(const FinCategory& C, MorphismIndex f);

std::vector<Factorization> fundamental_factorizations(const DegreedCategory& C, MorphismIndex f);
bool is_basic(const DegreedCategory& C, MorphismIndex f);

// The graph on the given vertices, keeping only connectors accepted by the
// filter (all connectors when the filter is empty).
FactorizationGraph factorization_graph(const FinCategory& C, MorphismIndex f, std::vector<Factorization> vertices,
                                       const std::vector<bool>* connector_filter = nullptr);

// Components of the graph of factorizations of f with mid-degree < bound.
FactorizationComponents factorization_components(const DegreedCategory& C, MorphismIndex f, int bound);

// A zigzag from a to b through factorizations of mid-degree < bound, where the
// endpoints themselves may sit at any degree.
std::optional<std::vector<Factorization>> zigzag_within(const DegreedCategory& C, MorphismIndex f,
                                                        const Factorization& a, const Factorization& b, int bound);

// ∂_δ C(x, y): composable pairs x → z → y with deg z < δ modulo
// (p, q′∘k) ∼ (k∘p, q′).
struct BoundaryHom {
  ObjectIndex x = kNoIndex;
  ObjectIndex y = kNoIndex;
  int delta = 0;
  std::vector<Factorization> pairs;
  std::vector<int> class_of;                 // per pair
  std::vector<int> representative;           // per class, least pair index
  std::vector<MorphismIndex> to_hom;         // per class, the composite

  [[nodiscard]] int class_count() const noexcept { return static_cast<int>(representative.size()); }
  [[nodiscard]] int classes_over(MorphismIndex f) const;
};

BoundaryHom boundary_hom(const DegreedCategory& C, ObjectIndex x, ObjectIndex y, int delta);

// Morphism-indexed flags.
struct MorphismClasses {
  std::vector<bool> up;
  std::vector<bool> down;
  std::vector<bool> level;
};

// Precomputed basic-morphism data for one degreed category.
class DegreeAnalysis {
 public:
  explicit DegreeAnalysis(DegreedCategory C);

  [[nodiscard]] const DegreedCategory& degreed() const noexcept { return C_; }
  [[nodiscard]] const FinCategory& cat() const noexcept { return C_.cat(); }
  [[nodiscard]] int degree(ObjectIndex x) const { return C_.degree(x); }
  [[nodiscard]] bool basic(MorphismIndex f) const { return fundamental_[f].empty(); }
  [[nodiscard]] bool level(MorphismIndex f) const { return C_.is_level(f); }
  [[nodiscard]] bool raises(MorphismIndex f) const { return C_.src_degree(f) < C_.tgt_degree(f); }
  [[nodiscard]] bool lowers(MorphismIndex f) const { return C_.src_degree(f) > C_.tgt_degree(f); }
  [[nodiscard]] bool up(MorphismIndex f) const { return basic(f) && !lowers(f); }
  [[nodiscard]] bool down(MorphismIndex f) const { return basic(f) && !raises(f); }
  [[nodiscard]] bool basic_level(MorphismIndex f) const { return basic(f) && level(f); }
  [[nodiscard]] std::span<const Factorization> fundamental(MorphismIndex f) const { return fundamental_[f]; }
  [[nodiscard]] std::span<const Factorization> factorizations(MorphismIndex f) const { return all_[f]; }
  [[nodiscard]] MorphismClasses classes() const;

 private:
  DegreedCategory C_;
  std::vector<std::vector<Factorization>> all_;
  std::vector<std::vector<Factorization>> fundamental_;
};

MorphismClasses basic_classes(const DegreedCategory& C);

enum class FactorMode { Strict, Generalized };

// The iterative down-then-up factorization. Strict mode requires an
// almost-Reedy category and stops when both refactored outer pieces are
// identities; generalized mode requires almost c-Reedy and stops when they
// are basic level.
class ReedyFactorizer {
 public:
  // Checks the precondition once (NotAlmostReedy on failure).
  ReedyFactorizer(const DegreedCategory& C, FactorMode mode);
  // Uses an existing analysis and skips the precondition check.
  ReedyFactorizer(std::shared_ptr<const DegreeAnalysis> analysis, FactorMode mode);

  [[nodiscard]] Factorization factor(MorphismIndex f) const;

 private:
  [[nodiscard]] Factorization factor_with_guard(MorphismIndex f, int& steps) const;
  std::shared_ptr<const DegreeAnalysis> analysis_;
  FactorMode mode_;
};

Factorization reedy_factor(const DegreedCategory& C, MorphismIndex f, FactorMode mode = FactorMode::Strict);

}  // namespace reedy
