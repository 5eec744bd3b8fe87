#include <doctest.h>

#include <random>

#include "reedy/corpus.hpp"
#include "reedy/wfs.hpp"
#include "support.hpp"

using namespace reedy;
using reedy::test::make_diagram;
using reedy::test::obj;

namespace {

DegreedCategory cat(const char* name) { return builtin(name).category; }

FinFunction fn(int codomain, std::vector<int> image) { return {codomain, std::move(image)}; }

// The inclusion of the subdiagram on the elements accepted by `keep`.
DiagramMap subdiagram(const SetDiagram& X, const std::function<bool(ObjectIndex, int)>& keep) {
  const FinCategory& C = X.shape();
  std::vector<std::vector<std::string>> sets(C.object_count());
  std::vector<std::vector<int>> inclusion(C.object_count()), position(C.object_count());
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    position[x].assign(X.size(x), -1);
    for (int a = 0; a < X.size(x); ++a)
      if (keep(x, a)) {
        position[x][a] = static_cast<int>(sets[x].size());
        sets[x].push_back(X.elements(x)[a]);
        inclusion[x].push_back(a);
      }
  }
  std::vector<std::vector<int>> maps(C.morphism_count());
  for (MorphismIndex f : C.morphisms())
    for (int a : inclusion[C.src(f)]) maps[f].push_back(position[C.tgt(f)][X.apply(f, a)]);
  return DiagramMap(SetDiagram(X.shared_shape(), std::move(sets), std::move(maps)), X, std::move(inclusion));
}

DiagramMap from_empty(const SetDiagram& X) {
  return subdiagram(X, [](ObjectIndex, int) { return false; });
}

bool is_composite(const MapFactorization& f, const DiagramMap& m) { return compose(f.right, f.left) == m; }

}  // namespace

TEST_CASE("the base weak factorization system on finite sets") {
  CHECK(base_classify(FinFunction::identity(2)) == MapClass{true, true});
  CHECK(base_classify(fn(1, {0, 0})) == MapClass{false, true});
  CHECK(base_classify(fn(2, {0})) == MapClass{true, false});
  CHECK(base_classify(fn(0, {})) == MapClass{true, true});

  SUBCASE("mapping-cylinder factorization") {
    const auto [l, r] = base_factorize(fn(1, {0, 0}));
    CHECK(l == fn(3, {0, 1}));
    CHECK(r == fn(1, {0, 0, 0}));
    const auto [li, ri] = base_factorize(FinFunction::identity(2));
    CHECK(li == fn(4, {0, 1}));
    CHECK(ri == fn(2, {0, 1, 0, 1}));
    const auto [le, re] = base_factorize(fn(3, {}));
    CHECK(le == fn(3, {}));
    CHECK(re == FinFunction::identity(3));
  }
}

TEST_CASE("lifting in finite sets") {
  SUBCASE("the empty set against a surjection") {
    const auto lift = solve_lifting(fn(1, {}), fn(1, {0, 0}), fn(2, {}), fn(1, {0}));
    REQUIRE(lift);
    CHECK(*lift == fn(2, {0}));
  }
  SUBCASE("a fold against a surjection that separates its preimages") {
    CHECK_FALSE(solve_lifting(fn(1, {0, 0}), fn(1, {0, 0}), fn(2, {0, 1}), fn(1, {0})).has_value());
  }
  SUBCASE("a fold against an injection always lifts once the square commutes") {
    CHECK(solve_lifting(fn(1, {0, 0}), fn(2, {0}), fn(1, {0, 0}), fn(2, {0})).has_value());
  }
  SUBCASE("a square that does not commute is rejected") {
    CHECK_THROWS_AS(solve_lifting(fn(1, {0}), fn(2, {0, 1}), fn(2, {1}), fn(2, {0})), Error);
  }
}

TEST_CASE("Reedy classification of diagram maps") {
  SUBCASE("identities are in both classes") {
    for (const auto& C : {cat("parallel_pair"), truncated_simplex(2), cat("almost_reedy_square")}) {
      std::mt19937_64 rng(4);
      const auto X = random_diagram(C.shared_cat(), rng);
      CHECK(reedy_classify_map(C, identity_map(X)).cls == MapClass{true, true});
    }
  }
  SUBCASE("over the parallel pair: a surjection with surjective matching map is R") {
    const auto P = cat("parallel_pair");
    // x sits over y via (f, g); B(x) hits every pair of B(y) and A covers it.
    const auto A = make_diagram(P, {5, 2}, {{"f", {0, 0, 1, 1, 1}}, {"g", {0, 1, 0, 1, 1}}});
    const auto B = make_diagram(P, {4, 2}, {{"f", {0, 0, 1, 1}}, {"g", {0, 1, 0, 1}}});
    const DiagramMap m(A, B, {{0, 1, 2, 3, 3}, {0, 1}});
    const auto r = reedy_classify_map(P, m);
    CHECK(r.cls.is_R);
    CHECK_FALSE(r.cls.is_L);

    // One element over x sees only one of the four pairs below it.
    const auto A1 = make_diagram(P, {1, 2}, {{"f", {0}}, {"g", {0}}});
    const auto B1 = make_diagram(P, {1, 1}, {{"f", {0}}, {"g", {0}}});
    const DiagramMap collapse(A1, B1, {{0}, {0, 0}});
    const auto c = reedy_classify_map(P, collapse);
    CHECK_FALSE(c.cls.is_R);
    CHECK_FALSE(c.cls.is_L);
    CHECK(c.relative[obj(P.cat(), "y")].matching.surjective());
    CHECK_FALSE(c.relative[obj(P.cat(), "x")].matching.surjective());
  }
  SUBCASE("the boundary of the 2-simplex is L, with degenerate latching inclusions") {
    const auto Dop = opposite(truncated_simplex(2));
    const auto top = obj(Dop.cat(), "2");
    const auto X = representable(Dop.shared_cat(), top);
    const auto id = X.find_element(top, Dop.cat().morphism_id(Dop.cat().identity(top)));
    const auto m = subdiagram(X, [&](ObjectIndex x, int a) { return x != top || a != id; });
    const auto r = reedy_classify_map(Dop, m);
    CHECK(r.cls.is_L);
    CHECK_FALSE(r.cls.is_R);
    for (const auto& rel : r.relative) CHECK(rel.latching.injective());
  }
  SUBCASE("categories outside the theory are refused") {
    const auto Q = cat("c_reedy_square");
    std::mt19937_64 rng(1);
    const auto X = random_diagram(Q.shared_cat(), rng);
    CHECK_THROWS_AS(reedy_classify_map(Q, identity_map(X)), Error);
  }
}

TEST_CASE("projective L maps") {
  SUBCASE("the empty functor into a representable") {
    const auto D = truncated_simplex(1);
    for (ObjectIndex d = 0; d < D.cat().object_count(); ++d)
      CHECK(projective_L_check(from_empty(representable(D.shared_cat(), d))).holds);
  }
  SUBCASE("the group of order 2: free actions yes, trivial actions no") {
    const auto Z = cat("z2_group");
    const auto trivial = projective_L_check(from_empty(make_diagram(Z, {1}, {{"t", {0}}})));
    CHECK(trivial.injective);
    CHECK(trivial.complemented);
    CHECK_FALSE(trivial.holds);
    CHECK(projective_L_check(from_empty(make_diagram(Z, {2}, {{"t", {1, 0}}}))).holds);
  }
  SUBCASE("over a discrete shape, injections qualify and nothing else does") {
    const auto D = cat("discrete_2");
    const auto A = make_diagram(D, {1, 2}, {});
    const auto B = make_diagram(D, {3, 2}, {});
    CHECK(projective_L_check(DiagramMap(A, B, {{2}, {1, 0}})).holds);
    const auto B2 = make_diagram(D, {1, 2}, {});
    const auto bad = projective_L_check(DiagramMap(B, B2, {{0, 0, 0}, {0, 1}}));
    CHECK_FALSE(bad.injective);
    CHECK_FALSE(bad.holds);
  }
  SUBCASE("an injection whose image is not a subfunctor complement") {
    const auto A = cat("arrow");
    const auto X = make_diagram(A, {1, 1}, {{"a", {0}}});
    const auto m = subdiagram(X, [](ObjectIndex x, int) { return x == 1; });
    const auto r = projective_L_check(m);
    CHECK(r.injective);
    CHECK_FALSE(r.complemented);
    CHECK_FALSE(r.holds);
  }
}

TEST_CASE("c-Reedy classification") {
  SUBCASE("identities") {
    const auto Q = cat("c_reedy_square");
    std::mt19937_64 rng(8);
    const auto X = random_diagram(Q.shared_cat(), rng);
    CHECK(creedy_classify_map(Q, identity_map(X)).cls == MapClass{true, true});
  }
  SUBCASE("a representable complement over the c-Reedy square is L") {
    const auto Q = cat("c_reedy_square");
    const auto m = from_empty(representable(Q.shared_cat(), obj(Q.cat(), "a")));
    CHECK(creedy_classify_map(Q, m).cls.is_L);
  }
  SUBCASE("a stratum with a nontrivial automorphism obstructs the trivial action") {
    const auto Z = cat("z2_group");
    CHECK_FALSE(creedy_classify_map(Z, from_empty(make_diagram(Z, {1}, {{"t", {0}}}))).cls.is_L);
    CHECK(creedy_classify_map(Z, from_empty(make_diagram(Z, {2}, {{"t", {1, 0}}}))).cls.is_L);
  }
  SUBCASE("agrees with the Reedy classification on discrete strata") {
    for (const auto& C : {cat("parallel_pair"), truncated_simplex(1), cat("almost_reedy_square"), cat("rezk_poset")}) {
      std::mt19937_64 rng(31);
      for (int t = 0; t < 15; ++t) {
        const auto m = random_diagram_map(C.shared_cat(), rng);
        if (!m) continue;
        CHECK(creedy_classify_map(C, *m).cls == reedy_classify_map(C, *m).cls);
      }
    }
  }
  SUBCASE("needs a bistratified category") {
    const auto I = cat("iso_pair");
    std::mt19937_64 rng(1);
    const auto X = random_diagram(I.shared_cat(), rng);
    CHECK_THROWS_AS(creedy_classify_map(I, identity_map(X)), Error);
  }
}

TEST_CASE("Reedy factorization of diagram maps and the lifting property") {
  for (const auto& C : {cat("parallel_pair"), truncated_simplex(1), cat("almost_reedy_square")}) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 12; ++t) {
      const auto m = random_diagram_map(C.shared_cat(), rng, 2);
      if (!m) continue;
      const auto f = reedy_factorize_map(C, *m);
      CHECK(is_composite(f, *m));
      CHECK(reedy_classify_map(C, f.left).cls.is_L);
      CHECK(reedy_classify_map(C, f.right).cls.is_R);
      CHECK(reedy_factorize_map(C, *m).left == f.left);

      // A map outside a class fails to lift against its own factor.
      const auto cls = reedy_classify_map(C, *m).cls;
      if (!cls.is_L) {
        const LiftingProblem p{*m, f.right, f.left, identity_map(m->target())};
        CHECK_FALSE(solve_lifting(p).has_value());
      }
      if (!cls.is_R) {
        const LiftingProblem p{f.left, *m, identity_map(m->source()), f.right};
        CHECK_FALSE(solve_lifting(p).has_value());
      }
    }
  }
}

TEST_CASE("Reedy L maps lift against Reedy R maps over the parallel pair") {
  const auto P = cat("parallel_pair");
  std::mt19937_64 rng(5);
  std::vector<DiagramMap> Ls, Rs;
  for (int t = 0; t < 200 && (Ls.size() < 3 || Rs.size() < 3); ++t) {
    const auto m = random_diagram_map(P.shared_cat(), rng, 2);
    if (!m) continue;
    const auto cls = reedy_classify_map(P, *m).cls;
    if (cls.is_L && Ls.size() < 3) Ls.push_back(*m);
    if (cls.is_R && Rs.size() < 3) Rs.push_back(*m);
  }
  REQUIRE(!Ls.empty());
  REQUIRE(!Rs.empty());
  int squares = 0;
  for (const auto& l : Ls)
    for (const auto& r : Rs)
      for_each_lifting_problem(l, r, [&](const LiftingProblem& p) {
        ++squares;
        CHECK_NOTHROW(validate_lifting_problem(p));
        const auto lift = solve_lifting(p);
        REQUIRE(lift.has_value());
        return true;
      });
  CHECK(squares > 0);
}

TEST_CASE("dual classification matches classification over the opposite") {
  for (const auto& C : {cat("parallel_pair"), truncated_simplex(1), cat("almost_reedy_square"), cat("arrow")}) {
    const auto D = opposite(C);
    std::mt19937_64 rng(101);
    for (int t = 0; t < 20; ++t) {
      const auto m = random_diagram_map(D.shared_cat(), rng);
      if (!m) continue;
      const auto direct = reedy_classify_map(D, *m).cls;
      const auto dual = reedy_classify_dual(C, *m);
      CHECK(direct.is_L == dual.is_R);
      CHECK(direct.is_R == dual.is_L);
    }
  }
}
