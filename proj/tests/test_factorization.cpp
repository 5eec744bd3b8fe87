#include <doctest.h>

#include <algorithm>

#include "reedy/corpus.hpp"
#include "reedy/factorization.hpp"
#include "support.hpp"

using namespace reedy;
using reedy::test::mor;
using reedy::test::obj;

namespace {

const DegreedCategory& square() {
  static const DegreedCategory S = builtin("almost_reedy_square").category;
  return S;
}

}  // namespace

TEST_CASE("fundamental factorizations") {
  const auto& C = square().cat();
  SUBCASE("the composite a → d factors only through c") {
    const auto fs = fundamental_factorizations(square(), mor(C, "ad"));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == mor(C, "ac"));
    CHECK(fs[0].second == mor(C, "cd"));
    CHECK(fs[0].mid == obj(C, "c"));
  }
  SUBCASE("identities at degree 0 have none") {
    for (const auto& entry : all_builtins())
      for (ObjectIndex x = 0; x < entry.category.cat().object_count(); ++x)
        if (entry.category.degree(x) == 0)
          CHECK(fundamental_factorizations(entry.category, entry.category.cat().identity(x)).empty());
  }
  SUBCASE("the identity of 1 in the iso pair factors through 0") {
    const auto I = builtin("iso_pair").category;
    const auto& c = I.cat();
    const auto fs = fundamental_factorizations(I, c.identity(obj(c, "1")));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == mor(c, "g"));
    CHECK(fs[0].second == mor(c, "f"));
    CHECK(fs[0].mid == obj(c, "0"));
  }
}

TEST_CASE("basic morphisms") {
  const auto& C = square().cat();
  CHECK(is_basic(square(), mor(C, "ab")));
  CHECK_FALSE(is_basic(square(), mor(C, "ad")));
  for (const auto& entry : all_builtins()) {
    const auto& D = entry.category;
    for (MorphismIndex f : D.cat().morphisms())
      if (D.src_degree(f) == 0 || D.tgt_degree(f) == 0) CHECK(is_basic(D, f));
  }
}

TEST_CASE("every factorization composes to the morphism") {
  for (const auto& entry : all_builtins()) {
    const auto& C = entry.category.cat();
    for (MorphismIndex f : C.morphisms()) {
      const auto all = all_factorizations(C, f);
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& fac : all) CHECK(C.compose(fac.second, fac.first) == f);
    }
  }
}

TEST_CASE("factorization components") {
  const auto& C = square().cat();
  SUBCASE("a → d below degree 1 is a single factorization") {
    const auto comp = factorization_components(square(), mor(C, "ad"), 1);
    CHECK(comp.count() == 1);
    CHECK(comp.components()[0].size() == 1);
  }
  SUBCASE("no factorization below degree 0") {
    CHECK(factorization_components(square(), mor(C, "ad"), 0).count() == 0);
  }
  SUBCASE("a composite endomorphism of [2] through [1] is one zigzag class") {
    const auto D = truncated_simplex(2);
    const auto& d = D.cat();
    const MorphismIndex f = d.compose(mor(d, "1to2_02"), mor(d, "2to1_001"));
    CHECK(d.morphism_id(f) == "2to2_002");
    CHECK_FALSE(is_basic(D, f));
    CHECK(factorization_components(D, f, 2).connected());
  }
  SUBCASE("paths between factorizations are genuine zigzags") {
    const auto D = truncated_simplex(2);
    const auto& d = D.cat();
    for (MorphismIndex f : d.morphisms()) {
      const auto comp = factorization_components(D, f, 3);
      const auto& g = comp.graph();
      for (int a = 0; a < static_cast<int>(g.vertices.size()); ++a)
        for (int b = 0; b < static_cast<int>(g.vertices.size()); ++b) {
          const auto path = comp.path(a, b);
          CHECK(path.has_value() == (comp.component_of(a) == comp.component_of(b)));
          if (!path) continue;
          int at = a;
          for (const auto& step : *path) {
            const auto& e = g.edges[step.edge];
            CHECK((step.forward ? e.from : e.to) == at);
            at = step.forward ? e.to : e.from;
          }
          CHECK(at == b);
        }
      for (const auto& e : g.edges) {
        const auto& u = g.vertices[e.from];
        const auto& v = g.vertices[e.to];
        CHECK(d.compose(e.connector, u.first) == v.first);
        CHECK(d.compose(v.second, e.connector) == u.second);
      }
    }
  }
}

TEST_CASE("boundary homs") {
  const auto& C = square().cat();
  SUBCASE("from a to d below degree 1: one class over a → d") {
    const auto b = boundary_hom(square(), obj(C, "a"), obj(C, "d"), 1);
    REQUIRE(b.class_count() == 1);
    CHECK(b.to_hom[0] == mor(C, "ad"));
    CHECK(b.classes_over(mor(C, "ad")) == 1);
  }
  SUBCASE("degree bound 0 gives nothing") {
    for (ObjectIndex x = 0; x < C.object_count(); ++x)
      for (ObjectIndex y = 0; y < C.object_count(); ++y) CHECK(boundary_hom(square(), x, y, 0).class_count() == 0);
  }
  SUBCASE("the parallel pair has two singleton classes") {
    const auto P = builtin("parallel_pair").category;
    const auto& p = P.cat();
    const auto b = boundary_hom(P, obj(p, "x"), obj(p, "y"), 1);
    REQUIRE(b.class_count() == 2);
    CHECK(b.pairs.size() == 2);
    for (const auto& pair : b.pairs) CHECK(pair.second == p.identity(obj(p, "y")));
    std::vector<MorphismIndex> targets = b.to_hom;
    std::sort(targets.begin(), targets.end());
    CHECK(targets == std::vector<MorphismIndex>{std::min(mor(p, "f"), mor(p, "g")), std::max(mor(p, "f"), mor(p, "g"))});
  }
}

TEST_CASE("basic classes") {
  SUBCASE("almost-Reedy square") {
    const auto cls = basic_classes(square());
    const auto& C = square().cat();
    for (const char* f : {"ab", "bd", "ac"}) CHECK(cls.down[mor(C, f)]);
    CHECK(cls.up[mor(C, "cd")]);
    for (MorphismIndex f : C.morphisms()) CHECK(cls.level[f] == C.is_identity(f));
  }
  SUBCASE("a discrete category") {
    const auto D = builtin("discrete_2").category;
    const auto cls = basic_classes(D);
    for (MorphismIndex f : D.cat().morphisms()) {
      CHECK(cls.up[f]);
      CHECK(cls.down[f]);
      CHECK(cls.level[f]);
    }
  }
  SUBCASE("orbit category with degree |H|") {
    const auto O = builtin("orbit_Z2_degH").category;
    const auto& o = O.cat();
    const DegreeAnalysis A(O);
    const auto cls = A.classes();
    for (MorphismIndex f : o.morphisms()) {
      CHECK(A.basic(f));
      CHECK(cls.up[f]);
      CHECK(cls.down[f] == o.is_isomorphism(f));
    }
  }
}

TEST_CASE("Reedy factorization") {
  const auto& C = square().cat();
  SUBCASE("a → d goes through c") {
    const auto f = reedy_factor(square(), mor(C, "ad"));
    CHECK(f.first == mor(C, "ac"));
    CHECK(f.second == mor(C, "cd"));
  }
  SUBCASE("basic morphisms factor trivially") {
    for (MorphismIndex g : C.morphisms()) {
      if (!is_basic(square(), g)) continue;
      const auto f = reedy_factor(square(), g);
      if (square().src_degree(g) >= square().tgt_degree(g)) {
        CHECK(f.first == g);
        CHECK(C.is_identity(f.second));
      } else {
        CHECK(C.is_identity(f.first));
        CHECK(f.second == g);
      }
    }
  }
  SUBCASE("the c-Reedy square returns one of its two factorizations, deterministically") {
    const auto S = builtin("c_reedy_square").category;
    const auto& s = S.cat();
    const auto f = reedy_factor(S, mor(s, "ad"), FactorMode::Generalized);
    const bool via_c = f.first == mor(s, "ac") && f.second == mor(s, "cd");
    const bool via_b = f.first == mor(s, "ab") && f.second == mor(s, "bd");
    CHECK((via_c || via_b));
    CHECK(reedy_factor(S, mor(s, "ad"), FactorMode::Generalized) == f);
  }
  SUBCASE("every morphism of the truncated simplex category splits as surjection then injection") {
    const auto D = truncated_simplex(2);
    const auto& d = D.cat();
    const auto cls = basic_classes(D);
    for (MorphismIndex g : d.morphisms()) {
      const auto f = reedy_factor(D, g);
      CHECK(d.compose(f.second, f.first) == g);
      CHECK(cls.down[f.first]);
      CHECK(cls.up[f.second]);
    }
  }
}
