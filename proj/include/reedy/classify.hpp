#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reedy/category.hpp"
#include "reedy/diagram.hpp"
#include "reedy/factorization.hpp"

namespace reedy {

// Evidence that a structure condition fails. `clause` names the violated
// condition; the remaining fields hold whatever data pins the failure down.
struct Witness {
  std::string clause;
  std::vector<MorphismIndex> morphisms;
  std::vector<Factorization> factorizations;
  std::optional<ObjectIndex> object;
  std::optional<int> degree;
  bool operator==(const Witness&) const = default;
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
  static CheckResult ok() { return {}; }
  static CheckResult failure(Witness w) { return {false, std::move(w)}; }
};

CheckResult check_inverse(const DegreedCategory& C);
CheckResult check_direct(const DegreedCategory& C);
CheckResult check_stratified(const DegreedCategory& C);

CheckResult check_bistratified(const DegreeAnalysis& A);
CheckResult check_discrete_strata(const DegreeAnalysis& A);
CheckResult check_groupoidal_strata(const DegreeAnalysis& A);
CheckResult check_almost_reedy(const DegreeAnalysis& A);
CheckResult check_reedy(const DegreeAnalysis& A);
CheckResult check_almost_g_reedy(const DegreeAnalysis& A);
CheckResult check_g_reedy(const DegreeAnalysis& A);
CheckResult check_almost_c_reedy(const DegreeAnalysis& A);
CheckResult check_c_reedy(const DegreeAnalysis& A);
// Closure of the basic up and down classes under composition.
CheckResult check_closure(const DegreeAnalysis& A);

CheckResult check_bistratified(const DegreedCategory& C);
CheckResult check_discrete_strata(const DegreedCategory& C);
CheckResult check_groupoidal_strata(const DegreedCategory& C);
CheckResult check_almost_reedy(const DegreedCategory& C);
CheckResult check_reedy(const DegreedCategory& C);
CheckResult check_almost_g_reedy(const DegreedCategory& C);
CheckResult check_g_reedy(const DegreedCategory& C);
CheckResult check_almost_c_reedy(const DegreedCategory& C);
CheckResult check_c_reedy(const DegreedCategory& C);

// Classical definitions with explicitly supplied classes of morphisms.
CheckResult check_reedy_definitional(const DegreedCategory& C, const std::vector<bool>& up,
                                     const std::vector<bool>& down);
CheckResult check_g_reedy_definitional(const DegreedCategory& C, const std::vector<bool>& up,
                                       const std::vector<bool>& down);
CheckResult check_c_reedy_definitional(const DegreedCategory& C, const std::vector<bool>& up,
                                       const std::vector<bool>& down, const std::vector<bool>& level);

// Decomposition of a set-valued functor into retracts of representables.
struct ElementRef {
  ObjectIndex object = kNoIndex;
  int element = 0;
  bool operator==(const ElementRef&) const = default;
};

struct RetractCone {
  std::vector<ElementRef> elements;        // the connected component
  ElementRef vertex;
  std::vector<MorphismIndex> projections;  // one per element, from the vertex
};

struct RetractDecomposition {
  bool success = true;
  std::vector<RetractCone> cones;
  std::vector<ElementRef> failing_component;  // empty on success
};

RetractDecomposition retract_decomposition(const SetDiagram& F);

struct InitialFinal {
  bool initial = true;
  bool final = true;
  std::optional<Witness> witness;
};

// Initiality of x⇓down in x⇓C and finality of up⇓x in C⇓x
// (NotAlmostReedy unless C is almost-Reedy).
InitialFinal check_initial_final(const DegreedCategory& C, ObjectIndex x);
InitialFinal check_initial_final(const DegreeAnalysis& A, ObjectIndex x);

enum class StructureClass {
  Inverse,
  Direct,
  Stratified,
  Bistratified,
  DiscreteStrata,
  GroupoidalStrata,
  AlmostReedy,
  Reedy,
  AlmostGReedy,
  GReedy,
  AlmostCReedy,
  CReedy,
};
inline constexpr std::size_t kStructureClassCount = 12;
inline constexpr std::array<StructureClass, kStructureClassCount> kAllStructureClasses = {
    StructureClass::Inverse,      StructureClass::Direct,           StructureClass::Stratified,
    StructureClass::Bistratified, StructureClass::DiscreteStrata,   StructureClass::GroupoidalStrata,
    StructureClass::AlmostReedy,  StructureClass::Reedy,            StructureClass::AlmostGReedy,
    StructureClass::GReedy,       StructureClass::AlmostCReedy,     StructureClass::CReedy,
};

std::string_view to_string(StructureClass c) noexcept;
std::optional<StructureClass> structure_class_from_string(std::string_view name) noexcept;

struct ClassificationReport {
  std::array<bool, kStructureClassCount> verdicts{};
  std::array<std::optional<Witness>, kStructureClassCount> witnesses{};

  [[nodiscard]] bool verdict(StructureClass c) const { return verdicts[static_cast<std::size_t>(c)]; }
  [[nodiscard]] const std::optional<Witness>& witness(StructureClass c) const {
    return witnesses[static_cast<std::size_t>(c)];
  }
};

// Runs every check; throws InternalInvariantBroken if the verdicts violate
// the implications between the classes.
ClassificationReport classify(const DegreedCategory& C);

// Human-readable rendering of a witness, using the category's identifiers.
std::string describe(const Witness& w, const FinCategory& C);

}  // namespace reedy
