#include <doctest.h>

#include <numeric>
#include <random>

#include "reedy/corpus.hpp"
#include "reedy/diagram.hpp"
#include "reedy/limits.hpp"
#include "support.hpp"

using namespace reedy;
using reedy::test::make_diagram;
using reedy::test::obj;

namespace {

DegreedCategory cat(const char* name) { return builtin(name).category; }

// Connected components of the category of elements of U ⊗ X, by brute force.
int coend_components(const FinCategory& C, const SetDiagram& U, const SetDiagram& X) {
  std::vector<std::array<int, 3>> elements;
  for (ObjectIndex c = 0; c < C.object_count(); ++c)
    for (int u = 0; u < U.size(c); ++u)
      for (int a = 0; a < X.size(c); ++a) elements.push_back({c, u, a});
  std::vector<int> parent(elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index = [&](int c, int u, int a) {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == std::array<int, 3>{c, u, a}) return static_cast<int>(i);
    FAIL("missing element");
    return -1;
  };
  const FinCategory& op = U.shape();
  for (MorphismIndex k : C.morphisms()) {
    const MorphismIndex kop = op.morphism_index(C.morphism_id(k));
    for (int u = 0; u < U.size(C.tgt(k)); ++u)
      for (int a = 0; a < X.size(C.src(k)); ++a)
        parent[find(index(C.src(k), U.apply(kop, u), a))] = find(index(C.tgt(k), u, X.apply(k, a)));
  }
  int roots = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) roots += find(static_cast<int>(i)) == static_cast<int>(i);
  return roots;
}

}  // namespace

TEST_CASE("diagrams must be functors and maps natural") {
  const auto P = cat("parallel_pair");
  CHECK_NOTHROW(make_diagram(P, {2, 1}, {{"f", {0, 0}}, {"g", {0, 0}}}));
  CHECK_THROWS_AS(make_diagram(P, {2, 1}, {{"f", {0, 1}}, {"g", {0, 0}}}), Error);
  const auto Z = cat("z2_group");
  CHECK_THROWS_AS(make_diagram(Z, {2}, {{"t", {0, 0}}}), Error);

  const auto A = make_diagram(P, {1, 2}, {{"f", {0}}, {"g", {1}}});
  const auto B = make_diagram(P, {1, 1}, {{"f", {0}}, {"g", {0}}});
  CHECK_NOTHROW(DiagramMap(A, B, {{0}, {0, 0}}));
  const auto C2 = make_diagram(P, {1, 2}, {{"f", {0}}, {"g", {0}}});
  CHECK_THROWS_AS(DiagramMap(A, C2, {{0}, {0, 1}}), Error);
}

TEST_CASE("composition of diagram maps") {
  const auto D = truncated_simplex(1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto m = random_diagram_map(D.shared_cat(), rng);
    if (!m) continue;
    CHECK(compose(identity_map(m->target()), *m) == *m);
    CHECK(compose(*m, identity_map(m->source())) == *m);
  }
}

TEST_CASE("natural maps out of a representable") {
  const auto D = truncated_simplex(2);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto X = random_diagram(D.shared_cat(), rng, 2);
    for (ObjectIndex c = 0; c < D.cat().object_count(); ++c) {
      int count = 0;
      search_natural_maps(representable(D.shared_cat(), c), X, {}, [&](const Components&) {
        ++count;
        return true;
      });
      CHECK(count == X.size(c));
    }
  }
}

TEST_CASE("weighted limits") {
  SUBCASE("a constant singleton weight gives the product over a discrete shape") {
    const auto D = cat("discrete_2");
    const auto X = make_diagram(D, {2, 3}, {});
    CHECK(weighted_limit(constant_diagram(D.shared_cat(), 1), X).size() == 6);
  }
  SUBCASE("a representable weight gives the value at its object") {
    const auto D = truncated_simplex(1);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      const auto X = random_diagram(D.shared_cat(), rng);
      for (ObjectIndex c = 0; c < D.cat().object_count(); ++c) {
        const auto W = representable(D.shared_cat(), c);
        const auto families = weighted_limit(W, X);
        CHECK(static_cast<int>(families.size()) == X.size(c));
        const int id = W.find_element(c, D.cat().morphism_id(D.cat().identity(c)));
        std::vector<int> at_identity;
        for (const auto& f : families) at_identity.push_back(f[c][id]);
        std::sort(at_identity.begin(), at_identity.end());
        std::vector<int> all(X.size(c));
        std::iota(all.begin(), all.end(), 0);
        CHECK(at_identity == all);
      }
    }
  }
  SUBCASE("the parallel pair below degree 1") {
    const auto P = cat("parallel_pair");
    const auto low = lower_part(P, 1);
    const auto W = restrict(representable(P.shared_cat(), obj(P.cat(), "x")), low.sub);
    const auto X = restrict(make_diagram(P, {1, 2}, {{"f", {0}}, {"g", {1}}}), low.sub);
    CHECK(weighted_limit(W, X).size() == 4);
  }
}

TEST_CASE("weighted colimits") {
  SUBCASE("a constant singleton weight gives the disjoint union") {
    const auto D = cat("discrete_2");
    const auto X = make_diagram(D, {2, 3}, {});
    const auto op = opposite(D);
    CHECK(weighted_colimit(constant_diagram(op.shared_cat(), 1), X).classes.class_count() == 5);
  }
  SUBCASE("a representable weight gives the value at its object") {
    for (const auto& C : {truncated_simplex(1), cat("parallel_pair"), cat("almost_reedy_square")}) {
      const auto op = opposite(C);
      std::mt19937_64 rng(9);
      for (int t = 0; t < 10; ++t) {
        const auto X = random_diagram(C.shared_cat(), rng);
        for (ObjectIndex c = 0; c < C.cat().object_count(); ++c) {
          const auto U = representable(op.shared_cat(), c);
          const auto coend = weighted_colimit(U, X);
          CHECK(coend.classes.class_count() == X.size(c));
          CHECK(coend.classes.class_count() == coend_components(C.cat(), U, X));
        }
      }
    }
  }
  SUBCASE("random weights agree with the brute-force component count") {
    const auto P = cat("parallel_pair");
    const auto op = opposite(P);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
      const auto U = random_diagram(op.shared_cat(), rng);
      const auto X = random_diagram(P.shared_cat(), rng);
      CHECK(weighted_colimit(U, X).classes.class_count() == coend_components(P.cat(), U, X));
    }
  }
}

TEST_CASE("matching objects") {
  SUBCASE("the parallel pair at x") {
    const auto P = cat("parallel_pair");
    const auto X = make_diagram(P, {1, 2}, {{"f", {0}}, {"g", {1}}});
    const auto M = matching_object(P, obj(P.cat(), "x"), X);
    CHECK(M.size() == 4);
    CHECK(M.cone.domain() == 1);
  }
  SUBCASE("objects of degree 0 have a singleton") {
    for (const auto& entry : all_builtins()) {
      std::mt19937_64 rng(1);
      const auto X = random_diagram(entry.category.shared_cat(), rng);
      for (ObjectIndex x = 0; x < entry.category.cat().object_count(); ++x)
        if (entry.category.degree(x) == 0) CHECK(matching_object(entry.category, x, X).size() == 1);
    }
  }
  SUBCASE("the almost-Reedy square at a is a pullback, not a product") {
    const auto S = cat("almost_reedy_square");
    const std::vector<int> id2{0, 1};
    const auto X = make_diagram(S, {2, 2, 2, 2},
                                {{"ab", id2}, {"ac", id2}, {"ad", id2}, {"bd", id2}, {"cd", id2}});
    const auto a = obj(S.cat(), "a");
    CHECK(matching_object(S, a, X).size() == 2);
    CHECK(graph_limit(S, a, X).size() == 4);
  }
  SUBCASE("the graph limit agrees with the matching object on Reedy categories") {
    for (const auto& C : {truncated_simplex(2), cat("rezk_poset"), cat("parallel_pair"), cat("arrow")}) {
      std::mt19937_64 rng(13);
      for (int t = 0; t < 5; ++t) {
        const auto X = random_diagram(C.shared_cat(), rng, 2);
        for (ObjectIndex x = 0; x < C.cat().object_count(); ++x) {
          const auto M = matching_object(C, x, X);
          const auto G = graph_limit(C, x, X);
          CHECK(static_cast<int>(G.size()) == M.size());
          if (C.degree(x) == 0) CHECK(G.size() == 1);
        }
      }
    }
  }
}

TEST_CASE("latching objects") {
  SUBCASE("objects of degree 0 have none") {
    for (const auto& entry : all_builtins()) {
      std::mt19937_64 rng(2);
      const auto X = random_diagram(entry.category.shared_cat(), rng);
      for (ObjectIndex x = 0; x < entry.category.cat().object_count(); ++x)
        if (entry.category.degree(x) == 0) CHECK(latching_object(entry.category, x, X).size() == 0);
    }
  }
  SUBCASE("a truncated simplicial set at dimension 1 sees its degenerate edges") {
    const auto Dop = opposite(truncated_simplex(2));
    const auto X = representable(Dop.shared_cat(), obj(Dop.cat(), "2"));
    const auto L = latching_object(Dop, obj(Dop.cat(), "1"), X);
    CHECK(L.size() == X.size(obj(Dop.cat(), "0")));
    CHECK(L.cocone.injective());
  }
  SUBCASE("the opposite parallel pair at x") {
    const auto Pop = opposite(cat("parallel_pair"));
    const auto X = make_diagram(Pop, {2, 2}, {{"f", {0, 1}}, {"g", {1, 0}}});
    CHECK(latching_object(Pop, obj(Pop.cat(), "x"), X).size() == 4);
  }
}
