// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "reedy/bigluing.hpp"
#include "reedy/classify.hpp"
#include "reedy/corpus.hpp"
#include "reedy/fs_reedy.hpp"
#include "reedy/limits.hpp"
#include "reedy/wfs.hpp"

using namespace reedy;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<bool> with_identities(const FinCategory& C, const std::vector<std::string>& ids) {
  std::vector<bool> out(C.morphism_count());
  for (const auto& id : ids) out[C.morphism_index(id)] = true;
  for (ObjectIndex x = 0; x < C.object_count(); ++x) out[C.identity(x)] = true;
  return out;
}

std::shared_ptr<const FinCategory> prefixed(const FinCategory& C, const std::string& prefix) {
  auto t = C.table();
  for (auto& o : t.objects) o = prefix + o;
  for (auto& m : t.morphisms) m.id = prefix + m.id;
  return std::make_shared<const FinCategory>(FinCategory::from_table(std::move(t)));
}

// ---- 1: verdicts on the named categories --------------------------------------

Outcome corpus_verdicts() {
  Outcome out;
  int checked = 0;
  const auto expect = [&](const std::string& what, bool got, bool want) {
    ++checked;
    if (got != want) {
      out.pass = false;
      out.detail += what + " ";
    }
  };
  {
    const DegreeAnalysis A(builtin("almost_reedy_square").category);
    expect("ars.bistratified", check_bistratified(A).holds, true);
    expect("ars.discrete", check_discrete_strata(A).holds, true);
    expect("ars.almost_reedy", check_almost_reedy(A).holds, true);
    expect("ars.reedy", check_reedy(A).holds, false);
  }
  {
    const DegreeAnalysis A(builtin("c_reedy_square").category);
    expect("crs.almost_c_reedy", check_almost_c_reedy(A).holds, true);
    expect("crs.c_reedy", check_c_reedy(A).holds, false);
    expect("crs.discrete", check_discrete_strata(A).holds, false);
  }
  expect("iso.bistratified", check_bistratified(builtin("iso_pair").category).holds, false);
  {
    const DegreedCategory R = builtin("rezk_poset").category;
    expect("rezk.reedy", check_reedy(R).holds, true);
    const auto up = with_identities(R.cat(), {"r02", "r12"});
    const auto down = with_identities(R.cat(), {"r10"});
    expect("rezk.enlarged.definitional", check_reedy_definitional(R, up, down).holds, false);
    const auto split = canonical_split(R.cat(), up, down);
    const auto ff = split ? derive_functorial_factorization(R.cat(), *split) : std::nullopt;
    expect("rezk.enlarged.fs", ff && validate_functorial_factorization(R, up, down, *ff).holds, true);
  }
  expect("delta2.reedy", check_reedy(builtin("delta_le_2").category).holds, true);
  expect("orbit.g_reedy", check_g_reedy(builtin("orbit_Z2_degH").category).holds, true);
  if (out.pass) out.detail = std::to_string(checked) + " verdicts match";
  return out;
}

// ---- 2-6: one pass over the enumeration ---------------------------------------

struct EnumerationTally {
  long categories = 0;
  long disagreements = 0;
  long almost_reedy = 0;
  long closed_almost_c_reedy = 0;
  long factorization_failures = 0;
  long zigzag_pairs = 0;
  long zigzag_failures = 0;
  long initial_final_failures = 0;
  long wfs_instances = 0;
  long wfs_maps = 0;
  long wfs_factor_failures = 0;
  long squares = 0;
  long lifting_failures = 0;
  long dual_maps = 0;
  long dual_failures = 0;
};

constexpr int kMapsPerInstance = 20;
constexpr int kPoolSize = 3;
constexpr int kMaxSetSize = 3;

bool sets_at_most(const DiagramMap& m, int n) {
  for (ObjectIndex x = 0; x < m.shape().object_count(); ++x)
    if (m.source().size(x) > n || m.target().size(x) > n) return false;
  return true;
}

void check_zigzags(const DegreedCategory& C, const DegreeAnalysis& A, long& pairs, long& failures) {
  for (MorphismIndex f : C.cat().morphisms()) {
    const auto fund = A.fundamental(f);
    for (std::size_t i = 0; i < fund.size(); ++i)
      for (std::size_t j = i + 1; j < fund.size(); ++j) {
        ++pairs;
        const int bound = std::max(C.degree(fund[i].mid), C.degree(fund[j].mid)) + 1;
        if (!zigzag_within(C, f, fund[i], fund[j], bound)) ++failures;
      }
  }
}

void check_classification(const DegreedCategory& C, const DegreeAnalysis& A, EnumerationTally& t) {
  const FinCategory& cat = C.cat();
  const auto cls = A.classes();
  const bool reedy = check_reedy(A).holds;
  if (reedy != check_reedy_definitional(C, cls.up, cls.down).holds) ++t.disagreements;
  if (check_c_reedy(A).holds != check_c_reedy_definitional(C, cls.up, cls.down, cls.level).holds) ++t.disagreements;
  if (check_g_reedy(A).holds != check_g_reedy_definitional(C, cls.up, cls.down).holds) ++t.disagreements;

  if (check_almost_reedy(A).holds) {
    ++t.almost_reedy;
    for (MorphismIndex f : cat.morphisms()) {
      int count = 0;
      Factorization only;
      for (const auto& fac : A.factorizations(f))
        if (cls.down[fac.first] && cls.up[fac.second]) {
          ++count;
          only = fac;
        }
      if (count != 1 || !(only == reedy_factor(C, f))) ++t.factorization_failures;
    }
    check_zigzags(C, A, t.zigzag_pairs, t.zigzag_failures);
    bool all_initial_final = true;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      const auto q = check_initial_final(A, x);
      all_initial_final = all_initial_final && q.initial && q.final;
    }
    if (all_initial_final != reedy) ++t.initial_final_failures;
  }

  if (check_almost_c_reedy(A).holds && check_closure(A).holds) {
    ++t.closed_almost_c_reedy;
    std::vector<bool> basic_level(cat.morphism_count());
    for (MorphismIndex g : cat.morphisms()) basic_level[g] = A.basic_level(g);
    for (MorphismIndex f : cat.morphisms()) {
      std::vector<Factorization> reedy_factorizations;
      for (const auto& fac : A.factorizations(f))
        if (cls.down[fac.first] && cls.up[fac.second]) reedy_factorizations.push_back(fac);
      const FactorizationComponents comp(factorization_graph(cat, f, std::move(reedy_factorizations), &basic_level));
      if (comp.count() != 1) ++t.factorization_failures;
    }
  }
}

void check_wfs(const DegreedCategory& C, std::mt19937_64& rng, EnumerationTally& t) {
  ++t.wfs_instances;
  const DegreedCategory op = opposite(C);
  std::vector<DiagramMap> lefts, rights;
  for (int i = 0; i < kMapsPerInstance; ++i) {
    if (auto m = random_diagram_map(C.shared_cat(), rng, kMaxSetSize)) {
      ++t.wfs_maps;
      const auto f = reedy_factorize_map(C, *m);
      const bool ok = compose(f.right, f.left) == *m && reedy_classify_map(C, f.left).cls.is_L &&
                      reedy_classify_map(C, f.right).cls.is_R;
      if (!ok) ++t.wfs_factor_failures;
      const auto cls = reedy_classify_map(C, *m).cls;
      if (cls.is_L && static_cast<int>(lefts.size()) < kPoolSize) lefts.push_back(*m);
      if (cls.is_R && static_cast<int>(rights.size()) < kPoolSize) rights.push_back(*m);
      if (sets_at_most(f.left, kMaxSetSize) && static_cast<int>(lefts.size()) < kPoolSize) lefts.push_back(f.left);
      if (sets_at_most(f.right, kMaxSetSize) && static_cast<int>(rights.size()) < kPoolSize)
        rights.push_back(f.right);
    }
    if (auto m = random_diagram_map(op.shared_cat(), rng, kMaxSetSize)) {
      ++t.dual_maps;
      const auto direct = reedy_classify_map(op, *m).cls;
      const auto dual = reedy_classify_dual(C, *m);
      if (direct.is_L != dual.is_R || direct.is_R != dual.is_L) ++t.dual_failures;
    }
  }
  for (const auto& l : lefts)
    for (const auto& r : rights)
      for_each_lifting_problem(l, r, [&](const LiftingProblem& p) {
        ++t.squares;
        if (!solve_lifting(p)) ++t.lifting_failures;
        return true;
      });
}

EnumerationTally run_enumeration() {
  EnumerationTally t;
  std::mt19937_64 rng(20240611);
  enumerate_small(kEnumerateMaxObjects, kEnumerateMaxMorphisms, {.up_to_iso = true, .max_degree = 3},
                  [&](const DegreedCategory& C) {
                    ++t.categories;
                    const DegreeAnalysis A(C);
                    check_classification(C, A, t);
                    if (check_bistratified(A).holds && check_discrete_strata(A).holds) check_wfs(C, rng, t);
                  });
  return t;
}

// No enumerated almost-Reedy category has a morphism with two fundamental
// factorizations, so the bound is also exercised on the named almost-Reedy
// categories and on the truncated simplex category up to [3].
Outcome zigzag_bound(const EnumerationTally& t) {
  long pairs = 0, failures = 0;
  std::vector<DegreedCategory> extra{truncated_simplex(3)};
  for (const auto& entry : all_builtins()) extra.push_back(entry.category);
  for (const auto& C : extra) {
    const DegreeAnalysis A(C);
    if (check_almost_reedy(A).holds) check_zigzags(C, A, pairs, failures);
  }
  return {pairs > 0 && failures == 0 && t.zigzag_failures == 0,
          std::to_string(t.zigzag_pairs) + " pairs from the enumeration, " + std::to_string(pairs) +
              " from named categories, " + std::to_string(failures + t.zigzag_failures) +
              " unconnected within the bound"};
}

Outcome initial_final_counterexample() {
  const DegreedCategory S = builtin("almost_reedy_square").category;
  const FinCategory& cat = S.cat();
  std::vector<std::vector<std::string>> sets(cat.object_count(), {"0", "1"});
  std::vector<std::vector<int>> maps(cat.morphism_count(), {0, 1});
  const SetDiagram X(S.shared_cat(), std::move(sets), std::move(maps));
  const ObjectIndex a = cat.object_index("a");
  const int matching = matching_object(S, a, X).size();
  const int graph = static_cast<int>(graph_limit(S, a, X).size());
  return {matching == 2 && graph == 4, "M_a X = " + std::to_string(matching) + ", graph limit = " + std::to_string(graph)};
}

// ---- 7: collages and bigluing --------------------------------------------------

Outcome bigluing_roundtrips() {
  std::mt19937_64 rng(7);
  int instances = 0, with_alpha = 0, diagrams = 0, failures = 0;
  const auto entries = all_builtins();
  for (int round = 0; round < 2; ++round)
    for (const auto& base : entries)
      for (const auto& top : entries) {
        if (base.category.cat().object_count() > 3 || top.category.cat().object_count() > 2) continue;
        const auto D = prefixed(top.category.cat(), "t");
        const auto abd = random_bigluing_data(base.category, D, rng, 2);
        if (!abd) continue;
        ++instances;
        if (!abd->alpha_table().empty() && !abd->alpha_table()[0].empty()) ++with_alpha;
        const DegreedCategory E = collage(*abd);
        const auto back = recognize_collage(E, base.category.max_degree() + 1);
        if (!(canonical_form(back) == canonical_form(*abd)) || !(collage(back) == E)) ++failures;
        for (int k = 0; k < 3; ++k) {
          const SetDiagram X = random_diagram(E.shared_cat(), rng, 2);
          const auto parts = biglue_split(*abd, X);
          ++diagrams;
          if (!(biglue_merge(*abd, parts.M, parts.N, parts.phi, parts.gamma) == X)) ++failures;
        }
      }
  return {instances >= 50 && failures == 0,
          std::to_string(instances) + " data (" + std::to_string(with_alpha) + " with nonempty alpha), " +
              std::to_string(diagrams) + " diagrams, " + std::to_string(failures) + " mismatches"};
}

// ---- 8: boundary homs two ways -------------------------------------------------

Outcome boundary_counts() {
  long triples = 0, mismatches = 0;
  for (const auto& entry : all_builtins()) {
    const DegreedCategory& C = entry.category;
    const FinCategory& cat = C.cat();
    for (ObjectIndex x = 0; x < cat.object_count(); ++x)
      for (ObjectIndex y = 0; y < cat.object_count(); ++y)
        for (int delta = 0; delta <= C.max_degree() + 1; ++delta) {
          ++triples;
          const BoundaryHom b = boundary_hom(C, x, y, delta);
          int components = 0;
          for (MorphismIndex f : cat.hom(x, y)) {
            const int n = factorization_components(C, f, delta).count();
            components += n;
            if (b.classes_over(f) != n) ++mismatches;
          }
          if (components != b.class_count()) ++mismatches;
        }
  }
  const DegreedCategory S = builtin("almost_reedy_square").category;
  const int ad = boundary_hom(S, S.cat().object_index("a"), S.cat().object_index("d"), 1).class_count();
  return {mismatches == 0 && ad == 1, std::to_string(triples) + " triples, " + std::to_string(mismatches) +
                                          " mismatches, boundary_1(a, d) has " + std::to_string(ad) + " class"};
}

// ---- 9: fs-reduction of the iso pair -------------------------------------------

Outcome iso_pair_reduction() {
  const DegreedCategory I = builtin("iso_pair").category;
  const FinCategory& cat = I.cat();
  const auto up = with_identities(cat, {"f"});
  const auto down = with_identities(cat, {"g"});
  const auto split = canonical_split(cat, up, down);
  const auto ff = split ? derive_functorial_factorization(cat, *split) : std::nullopt;
  if (!ff) return {false, "no functorial factorization"};
  const FsReduction r = fs_reduce(I, up, down, *ff);
  const bool ok = r.objects == std::vector<ObjectIndex>{cat.object_index("0")} && r.equivalence &&
                  r.reduced_reedy.holds && r.reduced.cat().object_count() == 1;
  return {ok, "reduced to " + std::to_string(r.objects.size()) + " object(s), equivalence " +
                  (r.equivalence ? "verified" : "not verified") + ", reduced Reedy " +
                  (r.reduced_reedy.holds ? "yes" : "no")};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  int failed = 0;
  const auto report = [&](int n, const char* name, const Outcome& o) {
    std::printf("%s %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str(),
                std::chrono::duration<double>(Clock::now() - start).count());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  report(1, "corpus verdicts", corpus_verdicts());

  const EnumerationTally t = run_enumeration();
  const std::string over = " over " + std::to_string(t.categories) + " degreed categories";
  report(2, "classical checks agree with definitions",
         {t.disagreements == 0, std::to_string(t.disagreements) + " disagreements" + over});
  report(3, "factorization uniqueness",
         {t.factorization_failures == 0 && t.almost_reedy > 0 && t.closed_almost_c_reedy > 0,
          std::to_string(t.factorization_failures) + " failures on " + std::to_string(t.almost_reedy) +
              " almost-Reedy and " + std::to_string(t.closed_almost_c_reedy) + " closed almost-c-Reedy instances"});
  report(4, "zigzag degree bound", zigzag_bound(t));
  const Outcome concrete = initial_final_counterexample();
  report(5, "initial/final criterion",
         {t.initial_final_failures == 0 && concrete.pass,
          std::to_string(t.initial_final_failures) + " mismatches; " + concrete.detail});
  report(6, "Reedy weak factorization system",
         {t.wfs_factor_failures == 0 && t.lifting_failures == 0 && t.dual_failures == 0 && t.wfs_instances > 0,
          std::to_string(t.wfs_instances) + " instances, " + std::to_string(t.wfs_maps) + " maps (" +
              std::to_string(t.wfs_factor_failures) + " bad factorizations), " + std::to_string(t.squares) +
              " squares (" + std::to_string(t.lifting_failures) + " unlifted), " + std::to_string(t.dual_maps) +
              " dual maps (" + std::to_string(t.dual_failures) + " mismatched)"});

  report(7, "collage and bigluing round trips", bigluing_roundtrips());
  report(8, "boundary hom double computation", boundary_counts());
  report(9, "fs-reduction of the iso pair", iso_pair_reduction());

  std::printf("%d of 9 criteria failed, %.1f s\n", failed,
              std::chrono::duration<double>(Clock::now() - start).count());
  return failed == 0 ? 0 : 1;
}
