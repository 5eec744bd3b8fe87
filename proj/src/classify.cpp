#include "reedy/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace reedy {

namespace {

Witness witness(std::string clause, std::vector<MorphismIndex> morphisms = {},
                std::vector<Factorization> factorizations = {}) {
  Witness w;
  w.clause = std::move(clause);
  w.morphisms = std::move(morphisms);
  w.factorizations = std::move(factorizations);
  return w;
}

// Witness if the given factorizations of f do not form a connected graph.
std::optional<Witness> disconnected(const FinCategory& C, MorphismIndex f, std::vector<Factorization> vertices,
                                    const std::vector<bool>* connectors, const char* clause) {
  FactorizationComponents comps(factorization_graph(C, f, std::move(vertices), connectors));
  if (comps.connected()) return std::nullopt;
  std::vector<Factorization> reps;
  for (std::size_t i = 0; i < std::min<std::size_t>(2, comps.count()); ++i)
    reps.push_back(comps.graph().vertices[comps.components()[i].front()]);
  return witness(clause, {f}, std::move(reps));
}

std::optional<Witness> identities_basic(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    const MorphismIndex i = C.identity(x);
    if (!A.basic(i)) {
      Witness w = witness("identity_not_basic", {i}, {A.fundamental(i).front()});
      w.object = x;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> basic_level_closed(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms()) {
    if (!A.basic_level(f)) continue;
    for (ObjectIndex z = 0; z < C.object_count(); ++z)
      for (MorphismIndex g : C.hom(C.tgt(f), z)) {
        if (!A.basic_level(g)) continue;
        const MorphismIndex gf = C.compose(g, f);
        if (!A.basic(gf)) return witness("basic_level_not_closed", {f, g, gf});
      }
  }
  return std::nullopt;
}

// Connectivity of fundamental factorizations for non-basic morphisms,
// restricted to level ones when `level_only` is set.
std::optional<Witness> fundamental_connected(const DegreeAnalysis& A, bool level_only) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms()) {
    if (A.basic(f) || (level_only && !A.level(f))) continue;
    const auto fund = A.fundamental(f);
    if (fund.size() == 1) continue;
    if (auto w = disconnected(C, f, {fund.begin(), fund.end()}, nullptr, "disconnected_factorizations")) return w;
  }
  return std::nullopt;
}

std::optional<Witness> discrete_strata(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms()) {
    if (C.is_identity(f) && !A.basic(f)) {
      Witness w = witness("identity_not_basic", {f}, {A.fundamental(f).front()});
      w.object = C.src(f);
      return w;
    }
    if (!C.is_identity(f) && A.basic_level(f)) return witness("nonidentity_basic_level", {f});
  }
  return std::nullopt;
}

std::optional<Witness> groupoidal_strata(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms()) {
    const bool iso = C.is_isomorphism(f);
    if (A.basic_level(f) && !iso) return witness("basic_level_not_iso", {f});
    if (iso && !A.basic_level(f)) return witness("iso_not_basic_level", {f});
  }
  return std::nullopt;
}

std::optional<Witness> automorphisms_free(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms()) {
    if (!A.basic(f) || !A.lowers(f)) continue;
    const ObjectIndex y = C.tgt(f);
    for (MorphismIndex theta : C.hom(y, y))
      if (!C.is_identity(theta) && C.is_isomorphism(theta) && C.compose(theta, f) == f)
        return witness("automorphism_not_free", {theta, f});
  }
  return std::nullopt;
}

std::optional<Witness> level_after_lowering_basic(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms()) {
    if (!A.basic(f) || !A.lowers(f)) continue;
    for (ObjectIndex z = 0; z < C.object_count(); ++z)
      for (MorphismIndex g : C.hom(C.tgt(f), z)) {
        if (!A.basic_level(g)) continue;
        const MorphismIndex gf = C.compose(g, f);
        if (!A.basic(gf)) return witness("level_after_lowering_not_basic", {f, g, gf});
      }
  }
  return std::nullopt;
}

CheckResult result(std::optional<Witness> w) { return w ? CheckResult::failure(std::move(*w)) : CheckResult::ok(); }

template <typename... Checks>
CheckResult first_failure(Checks&&... checks) {
  std::optional<Witness> found;
  ((found ? void() : void(found = checks())), ...);
  return result(std::move(found));
}

// ---- retract decomposition -------------------------------------------------

// Category of elements of a set-valued functor, presented through an ambient
// category whose composition is used for the arrows.
struct ElementCategory {
  const FinCategory* ambient = nullptr;
  std::vector<ElementRef> elements;
  // arrows[i][j]: ambient morphisms from the object of i to the object of j
  // that carry element i to element j.
  std::vector<std::vector<std::vector<MorphismIndex>>> arrows;
};

bool find_cone(const ElementCategory& E, const std::vector<int>& component, int vertex,
               std::vector<MorphismIndex>& h) {
  const FinCategory& C = *E.ambient;
  const int n = static_cast<int>(component.size());
  h.assign(n, kNoIndex);
  auto consistent = [&](int p) {
    const int e = component[p];
    for (int q = 0; q <= p; ++q) {
      const int e2 = component[q];
      for (MorphismIndex m : E.arrows[e2][e])
        if (C.compose(m, h[q]) != h[p]) return false;
      for (MorphismIndex m : E.arrows[e][e2])
        if (C.compose(m, h[p]) != h[q]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int p) -> bool {
    if (p == n) return true;
    for (MorphismIndex cand : E.arrows[vertex][component[p]]) {
      h[p] = cand;
      if (consistent(p) && self(self, p + 1)) return true;
    }
    h[p] = kNoIndex;
    return false;
  };
  return search(search, 0);
}

RetractDecomposition decompose(const ElementCategory& E) {
  const int n = static_cast<int>(E.elements.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!E.arrows[i][j].empty()) {
        const int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<int>> components;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[slot[r]].push_back(i);
  }

  RetractDecomposition out;
  for (const auto& comp : components) {
    bool found = false;
    std::vector<MorphismIndex> h;
    for (int vertex : comp) {
      if (find_cone(E, comp, vertex, h)) {
        RetractCone cone;
        for (int e : comp) cone.elements.push_back(E.elements[e]);
        cone.vertex = E.elements[vertex];
        cone.projections = h;
        out.cones.push_back(std::move(cone));
        found = true;
        break;
      }
    }
    if (!found) {
      out.success = false;
      out.cones.clear();
      for (int e : comp) out.failing_component.push_back(E.elements[e]);
      return out;
    }
  }
  return out;
}

// The functor y ↦ {f ∈ hom(x, y) : element_mask[f]} on the subcategory of
// objects of degree δ with morphisms in shape_mask, acting by composition.
// Returns false if the assignment is not closed under the action or if some
// component has no cone.
bool hom_functor_projective(const DegreedCategory& D, ObjectIndex x, int delta, const std::vector<bool>& shape_mask,
                            const std::vector<bool>& element_mask) {
  const FinCategory& C = D.cat();
  ElementCategory E;
  E.ambient = &C;
  std::vector<MorphismIndex> element_morphism;
  std::vector<int> element_of(C.morphism_count(), -1);
  for (ObjectIndex y = 0; y < C.object_count(); ++y) {
    if (D.degree(y) != delta) continue;
    int local = 0;
    for (MorphismIndex f : C.hom(x, y)) {
      if (!element_mask[f]) continue;
      element_of[f] = static_cast<int>(element_morphism.size());
      element_morphism.push_back(f);
      E.elements.push_back({y, local++});
    }
  }
  const int n = static_cast<int>(element_morphism.size());
  E.arrows.assign(n, std::vector<std::vector<MorphismIndex>>(n));
  for (int i = 0; i < n; ++i) {
    const MorphismIndex f = element_morphism[i];
    for (ObjectIndex y2 = 0; y2 < C.object_count(); ++y2) {
      if (D.degree(y2) != delta) continue;
      for (MorphismIndex g : C.hom(C.tgt(f), y2)) {
        if (!shape_mask[g]) continue;
        const int j = element_of[C.compose(g, f)];
        if (j < 0) return false;
        E.arrows[i][j].push_back(g);
      }
    }
  }
  return decompose(E).success;
}

std::optional<Witness> strata_functors_projective(const DegreeAnalysis& A, const std::vector<bool>& shape_mask,
                                                  const std::vector<bool>& element_mask, const char* clause) {
  const DegreedCategory& D = A.degreed();
  const FinCategory& C = D.cat();
  std::set<int> degrees(D.degrees().begin(), D.degrees().end());
  for (ObjectIndex x = 0; x < C.object_count(); ++x)
    for (int delta : degrees) {
      if (delta >= D.degree(x)) break;
      if (!hom_functor_projective(D, x, delta, shape_mask, element_mask)) {
        Witness w = witness(clause);
        w.object = x;
        w.degree = delta;
        return w;
      }
    }
  return std::nullopt;
}

std::vector<bool> mask_of(const DegreeAnalysis& A, bool (DegreeAnalysis::*pred)(MorphismIndex) const) {
  std::vector<bool> m(A.cat().morphism_count());
  for (MorphismIndex f : A.cat().morphisms()) m[f] = (A.*pred)(f);
  return m;
}

std::optional<Witness> wide_subcategory(const FinCategory& C, const std::vector<bool>& mask, const char* clause) {
  for (ObjectIndex x = 0; x < C.object_count(); ++x)
    if (!mask[C.identity(x)]) return witness(clause, {C.identity(x)});
  for (MorphismIndex f : C.morphisms()) {
    if (!mask[f]) continue;
    for (ObjectIndex z = 0; z < C.object_count(); ++z)
      for (MorphismIndex g : C.hom(C.tgt(f), z))
        if (mask[g] && !mask[C.compose(g, f)]) return witness(clause, {f, g, C.compose(g, f)});
  }
  return std::nullopt;
}

std::vector<Factorization> down_up_factorizations(const FinCategory& C, MorphismIndex f, const std::vector<bool>& up,
                                                  const std::vector<bool>& down) {
  std::vector<Factorization> out;
  for (const auto& fac : all_factorizations(C, f))
    if (down[fac.first] && up[fac.second]) out.push_back(fac);
  return out;
}

}  // namespace

// ---- simple degree conditions ----------------------------------------------

CheckResult check_inverse(const DegreedCategory& D) {
  const FinCategory& C = D.cat();
  for (MorphismIndex f : C.morphisms())
    if (!C.is_identity(f) && D.tgt_degree(f) >= D.src_degree(f)) return CheckResult::failure(witness("nonidentity_not_lowering", {f}));
  return CheckResult::ok();
}

CheckResult check_direct(const DegreedCategory& D) {
  const FinCategory& C = D.cat();
  for (MorphismIndex f : C.morphisms())
    if (!C.is_identity(f) && D.tgt_degree(f) <= D.src_degree(f)) return CheckResult::failure(witness("nonidentity_not_raising", {f}));
  return CheckResult::ok();
}

CheckResult check_stratified(const DegreedCategory& D) {
  const FinCategory& C = D.cat();
  for (MorphismIndex f : C.morphisms())
    if (D.tgt_degree(f) > D.src_degree(f)) return CheckResult::failure(witness("morphism_raises_degree", {f}));
  return CheckResult::ok();
}

// ---- characterizations ------------------------------------------------------

CheckResult check_bistratified(const DegreeAnalysis& A) {
  return first_failure([&] { return identities_basic(A); }, [&] { return basic_level_closed(A); },
                       [&] { return fundamental_connected(A, true); });
}

CheckResult check_discrete_strata(const DegreeAnalysis& A) { return result(discrete_strata(A)); }

CheckResult check_groupoidal_strata(const DegreeAnalysis& A) { return result(groupoidal_strata(A)); }

CheckResult check_almost_reedy(const DegreeAnalysis& A) {
  return first_failure([&] { return discrete_strata(A); }, [&] { return fundamental_connected(A, false); });
}

CheckResult check_closure(const DegreeAnalysis& A) {
  const FinCategory& C = A.cat();
  for (MorphismIndex f : C.morphisms())
    for (ObjectIndex z = 0; z < C.object_count(); ++z)
      for (MorphismIndex g : C.hom(C.tgt(f), z)) {
        const MorphismIndex gf = C.compose(g, f);
        if (A.up(f) && A.up(g) && !A.up(gf)) return CheckResult::failure(witness("up_not_closed", {f, g, gf}));
        if (A.down(f) && A.down(g) && !A.down(gf)) return CheckResult::failure(witness("down_not_closed", {f, g, gf}));
      }
  return CheckResult::ok();
}

CheckResult check_reedy(const DegreeAnalysis& A) {
  if (auto r = check_almost_reedy(A); !r) return r;
  return check_closure(A);
}

CheckResult check_almost_g_reedy(const DegreeAnalysis& A) {
  return first_failure([&] { return groupoidal_strata(A); }, [&] { return fundamental_connected(A, false); },
                       [&] { return automorphisms_free(A); });
}

CheckResult check_g_reedy(const DegreeAnalysis& A) {
  if (auto r = check_almost_g_reedy(A); !r) return r;
  return check_closure(A);
}

CheckResult check_almost_c_reedy(const DegreeAnalysis& A) {
  return first_failure([&] { return identities_basic(A); }, [&] { return basic_level_closed(A); },
                       [&] { return fundamental_connected(A, false); },
                       [&] { return level_after_lowering_basic(A); },
                       [&] {
                         return strata_functors_projective(A, mask_of(A, &DegreeAnalysis::basic_level),
                                                           mask_of(A, &DegreeAnalysis::basic),
                                                           "stratum_functor_not_projective");
                       });
}

CheckResult check_c_reedy(const DegreeAnalysis& A) {
  if (auto r = check_almost_c_reedy(A); !r) return r;
  return check_closure(A);
}

CheckResult check_bistratified(const DegreedCategory& C) { return check_bistratified(DegreeAnalysis(C)); }
CheckResult check_discrete_strata(const DegreedCategory& C) { return check_discrete_strata(DegreeAnalysis(C)); }
CheckResult check_groupoidal_strata(const DegreedCategory& C) { return check_groupoidal_strata(DegreeAnalysis(C)); }
CheckResult check_almost_reedy(const DegreedCategory& C) { return check_almost_reedy(DegreeAnalysis(C)); }
CheckResult check_reedy(const DegreedCategory& C) { return check_reedy(DegreeAnalysis(C)); }
CheckResult check_almost_g_reedy(const DegreedCategory& C) { return check_almost_g_reedy(DegreeAnalysis(C)); }
CheckResult check_g_reedy(const DegreedCategory& C) { return check_g_reedy(DegreeAnalysis(C)); }
CheckResult check_almost_c_reedy(const DegreedCategory& C) { return check_almost_c_reedy(DegreeAnalysis(C)); }
CheckResult check_c_reedy(const DegreedCategory& C) { return check_c_reedy(DegreeAnalysis(C)); }

// ---- classical definitions --------------------------------------------------

CheckResult check_reedy_definitional(const DegreedCategory& D, const std::vector<bool>& up,
                                     const std::vector<bool>& down) {
  const FinCategory& C = D.cat();
  if (auto w = wide_subcategory(C, up, "up_not_subcategory")) return CheckResult::failure(*w);
  if (auto w = wide_subcategory(C, down, "down_not_subcategory")) return CheckResult::failure(*w);
  for (MorphismIndex f : C.morphisms()) {
    if (C.is_identity(f)) continue;
    if (up[f] && D.src_degree(f) >= D.tgt_degree(f)) return CheckResult::failure(witness("up_not_raising", {f}));
    if (down[f] && D.src_degree(f) <= D.tgt_degree(f)) return CheckResult::failure(witness("down_not_lowering", {f}));
  }
  for (MorphismIndex f : C.morphisms()) {
    auto facs = down_up_factorizations(C, f, up, down);
    if (facs.empty()) return CheckResult::failure(witness("no_factorization", {f}));
    if (facs.size() > 1) return CheckResult::failure(witness("factorization_not_unique", {f}, {facs[0], facs[1]}));
  }
  return CheckResult::ok();
}

CheckResult check_g_reedy_definitional(const DegreedCategory& D, const std::vector<bool>& up,
                                       const std::vector<bool>& down) {
  const FinCategory& C = D.cat();
  if (auto w = wide_subcategory(C, up, "up_not_subcategory")) return CheckResult::failure(*w);
  if (auto w = wide_subcategory(C, down, "down_not_subcategory")) return CheckResult::failure(*w);
  std::vector<bool> iso(C.morphism_count());
  for (MorphismIndex f : C.morphisms()) iso[f] = C.is_isomorphism(f);
  for (MorphismIndex f : C.morphisms()) {
    if (up[f] && !iso[f] && D.src_degree(f) >= D.tgt_degree(f)) return CheckResult::failure(witness("up_not_raising", {f}));
    if (down[f] && !iso[f] && D.src_degree(f) <= D.tgt_degree(f))
      return CheckResult::failure(witness("down_not_lowering", {f}));
    if (iso[f] != (up[f] && down[f])) return CheckResult::failure(witness("iso_not_up_and_down", {f}));
    if (iso[f] && !D.is_level(f)) return CheckResult::failure(witness("iso_not_level", {f}));
  }
  for (MorphismIndex f : C.morphisms()) {
    auto facs = down_up_factorizations(C, f, up, down);
    if (facs.empty()) return CheckResult::failure(witness("no_factorization", {f}));
    for (std::size_t i = 0; i < facs.size(); ++i)
      for (std::size_t j = i + 1; j < facs.size(); ++j) {
        const auto& a = facs[i];
        const auto& b = facs[j];
        bool related = false;
        for (MorphismIndex theta : C.hom(a.mid, b.mid))
          if (iso[theta] && C.compose(theta, a.first) == b.first && C.compose(b.second, theta) == a.second) {
            related = true;
            break;
          }
        if (!related) return CheckResult::failure(witness("factorization_not_unique_up_to_iso", {f}, {a, b}));
      }
  }
  for (MorphismIndex f : C.morphisms()) {
    if (!down[f]) continue;
    const ObjectIndex y = C.tgt(f);
    for (MorphismIndex theta : C.hom(y, y))
      if (iso[theta] && !C.is_identity(theta) && C.compose(theta, f) == f)
        return CheckResult::failure(witness("automorphism_fixes_down", {theta, f}));
  }
  return CheckResult::ok();
}

CheckResult check_c_reedy_definitional(const DegreedCategory& D, const std::vector<bool>& up,
                                       const std::vector<bool>& down, const std::vector<bool>& level) {
  const FinCategory& C = D.cat();
  if (auto w = wide_subcategory(C, up, "up_not_subcategory")) return CheckResult::failure(*w);
  if (auto w = wide_subcategory(C, down, "down_not_subcategory")) return CheckResult::failure(*w);
  if (auto w = wide_subcategory(C, level, "level_not_subcategory")) return CheckResult::failure(*w);
  for (MorphismIndex f : C.morphisms()) {
    if (level[f] && !(up[f] && down[f])) return CheckResult::failure(witness("level_not_in_up_and_down", {f}));
    if (level[f] && !D.is_level(f)) return CheckResult::failure(witness("level_class_not_level", {f}));
    if (up[f] && !level[f] && D.src_degree(f) >= D.tgt_degree(f))
      return CheckResult::failure(witness("up_not_raising", {f}));
    if (down[f] && !level[f] && D.src_degree(f) <= D.tgt_degree(f))
      return CheckResult::failure(witness("down_not_lowering", {f}));
  }
  for (MorphismIndex f : C.morphisms()) {
    auto facs = down_up_factorizations(C, f, up, down);
    if (facs.empty()) return CheckResult::failure(witness("no_factorization", {f}));
    if (facs.size() > 1)
      if (auto w = disconnected(C, f, std::move(facs), &level, "factorizations_not_connected"))
        return CheckResult::failure(*w);
  }
  DegreeAnalysis A(D);
  return result(strata_functors_projective(A, level, down, "down_functor_not_projective"));
}

// ---- retract decomposition --------------------------------------------------

RetractDecomposition retract_decomposition(const SetDiagram& F) {
  const FinCategory& C = F.shape();
  ElementCategory E;
  E.ambient = &C;
  std::vector<int> offset(C.object_count() + 1, 0);
  for (ObjectIndex y = 0; y < C.object_count(); ++y) {
    offset[y + 1] = offset[y] + F.size(y);
    for (int a = 0; a < F.size(y); ++a) E.elements.push_back({y, a});
  }
  const int n = static_cast<int>(E.elements.size());
  E.arrows.assign(n, std::vector<std::vector<MorphismIndex>>(n));
  for (int i = 0; i < n; ++i) {
    const auto [y, a] = E.elements[i];
    for (ObjectIndex y2 = 0; y2 < C.object_count(); ++y2)
      for (MorphismIndex g : C.hom(y, y2)) E.arrows[i][offset[y2] + F.apply(g, a)].push_back(g);
  }
  return decompose(E);
}

// ---- initial / final --------------------------------------------------------

InitialFinal check_initial_final(const DegreeAnalysis& A, ObjectIndex x) {
  if (!check_almost_reedy(A)) fail(ErrorKind::NotAlmostReedy, "the initial/final criterion needs an almost-Reedy category");
  const DegreedCategory& D = A.degreed();
  const FinCategory& C = D.cat();
  const auto down = mask_of(A, &DegreeAnalysis::down);
  const auto up = mask_of(A, &DegreeAnalysis::up);
  InitialFinal out;
  for (ObjectIndex y = 0; y < C.object_count() && out.initial; ++y) {
    if (D.degree(y) >= D.degree(x)) continue;
    for (MorphismIndex f : C.hom(x, y)) {
      std::vector<Factorization> vertices;
      for (const auto& fac : A.factorizations(f))
        if (down[fac.first] && !C.is_identity(fac.first)) vertices.push_back(fac);
      if (auto w = disconnected(C, f, std::move(vertices), &down, "initial_comma_graph_disconnected")) {
        out.initial = false;
        w->object = x;
        out.witness = std::move(w);
        break;
      }
    }
  }
  for (ObjectIndex y = 0; y < C.object_count() && out.final; ++y) {
    if (D.degree(y) >= D.degree(x)) continue;
    for (MorphismIndex f : C.hom(y, x)) {
      std::vector<Factorization> vertices;
      for (const auto& fac : A.factorizations(f))
        if (up[fac.second] && !C.is_identity(fac.second)) vertices.push_back(fac);
      if (auto w = disconnected(C, f, std::move(vertices), &up, "final_comma_graph_disconnected")) {
        out.final = false;
        w->object = x;
        if (!out.witness) out.witness = std::move(w);
        break;
      }
    }
  }
  return out;
}

InitialFinal check_initial_final(const DegreedCategory& C, ObjectIndex x) {
  return check_initial_final(DegreeAnalysis(C), x);
}

// ---- report -----------------------------------------------------------------

std::string_view to_string(StructureClass c) noexcept {
  switch (c) {
    case StructureClass::Inverse: return "inverse";
    case StructureClass::Direct: return "direct";
    case StructureClass::Stratified: return "stratified";
    case StructureClass::Bistratified: return "bistratified";
    case StructureClass::DiscreteStrata: return "discrete_strata";
    case StructureClass::GroupoidalStrata: return "groupoidal_strata";
    case StructureClass::AlmostReedy: return "almost_reedy";
    case StructureClass::Reedy: return "reedy";
    case StructureClass::AlmostGReedy: return "almost_g_reedy";
    case StructureClass::GReedy: return "g_reedy";
    case StructureClass::AlmostCReedy: return "almost_c_reedy";
    case StructureClass::CReedy: return "c_reedy";
  }
  return "unknown";
}

std::optional<StructureClass> structure_class_from_string(std::string_view name) noexcept {
  for (StructureClass c : kAllStructureClasses)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

ClassificationReport classify(const DegreedCategory& C) {
  const DegreeAnalysis A(C);
  ClassificationReport r;
  auto put = [&](StructureClass c, CheckResult res) {
    r.verdicts[static_cast<std::size_t>(c)] = res.holds;
    r.witnesses[static_cast<std::size_t>(c)] = std::move(res.witness);
  };
  put(StructureClass::Inverse, check_inverse(C));
  put(StructureClass::Direct, check_direct(C));
  put(StructureClass::Stratified, check_stratified(C));
  put(StructureClass::Bistratified, check_bistratified(A));
  put(StructureClass::DiscreteStrata, check_discrete_strata(A));
  put(StructureClass::GroupoidalStrata, check_groupoidal_strata(A));
  put(StructureClass::AlmostReedy, check_almost_reedy(A));
  put(StructureClass::Reedy, check_reedy(A));
  put(StructureClass::AlmostGReedy, check_almost_g_reedy(A));
  put(StructureClass::GReedy, check_g_reedy(A));
  put(StructureClass::AlmostCReedy, check_almost_c_reedy(A));
  put(StructureClass::CReedy, check_c_reedy(A));

  auto v = [&](StructureClass c) { return r.verdict(c); };
  using S = StructureClass;
  const std::pair<S, S> implications[] = {
      {S::Reedy, S::AlmostReedy},        {S::AlmostReedy, S::AlmostCReedy}, {S::AlmostReedy, S::DiscreteStrata},
      {S::GReedy, S::AlmostGReedy},      {S::AlmostGReedy, S::AlmostCReedy}, {S::AlmostGReedy, S::GroupoidalStrata},
      {S::Reedy, S::CReedy},             {S::GReedy, S::CReedy},            {S::CReedy, S::AlmostCReedy},
      {S::AlmostReedy, S::Bistratified}, {S::AlmostGReedy, S::Bistratified}, {S::AlmostCReedy, S::Bistratified},
      {S::Inverse, S::Stratified},       {S::Stratified, S::Bistratified},
  };
  for (const auto& [from, to] : implications)
    if (v(from) && !v(to))
      fail(ErrorKind::InternalInvariantBroken,
           std::string(to_string(from)) + " holds but " + std::string(to_string(to)) + " does not");
  return r;
}

std::string describe(const Witness& w, const FinCategory& C) {
  std::string out = w.clause;
  if (!w.morphisms.empty()) {
    out += " [";
    for (std::size_t i = 0; i < w.morphisms.size(); ++i) out += (i ? ", " : "") + C.morphism_id(w.morphisms[i]);
    out += "]";
  }
  for (const auto& f : w.factorizations)
    out += " (" + C.morphism_id(f.first) + " then " + C.morphism_id(f.second) + " via " + C.object_id(f.mid) + ")";
  if (w.object) out += " at " + C.object_id(*w.object);
  if (w.degree) out += " degree " + std::to_string(*w.degree);
  return out;
}

}  // namespace reedy
