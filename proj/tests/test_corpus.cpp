#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "reedy/corpus.hpp"
#include "support.hpp"

using namespace reedy;
using reedy::test::hom_size;

namespace {

std::string serialize(const DegreedCategory& C) {
  const FinCategory& c = C.cat();
  std::ostringstream out;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) out << c.object_id(x) << ':' << C.degree(x) << ' ';
  out << '|';
  for (MorphismIndex f : c.morphisms()) out << ' ' << c.morphism_id(f) << '=' << c.src(f) << '>' << c.tgt(f);
  out << " |";
  for (MorphismIndex g : c.morphisms())
    for (MorphismIndex f : c.morphisms())
      if (c.composable(g, f)) out << ' ' << c.compose(g, f);
  return out.str();
}

// Permutations of the non-identity morphisms of a one-object category that
// preserve its composition table.
int automorphisms(const FinCategory& C) {
  std::vector<int> others;
  for (MorphismIndex f : C.morphisms())
    if (!C.is_identity(f)) others.push_back(f);
  std::vector<int> perm = others;
  int count = 0;
  do {
    std::vector<int> sigma(C.morphism_count());
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t i = 0; i < others.size(); ++i) sigma[others[i]] = perm[i];
    bool ok = true;
    for (MorphismIndex g : C.morphisms())
      for (MorphismIndex f : C.morphisms()) ok = ok && sigma[C.compose(g, f)] == C.compose(sigma[g], sigma[f]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("named entries") {
  SUBCASE("the almost-Reedy square") {
    const auto S = builtin("almost_reedy_square").category;
    const auto& c = S.cat();
    CHECK(c.object_count() == 4);
    CHECK(c.morphism_count() == 9);
    const std::vector<int> degrees(S.degrees().begin(), S.degrees().end());
    CHECK(degrees == std::vector<int>{3, 2, 0, 1});
  }
  SUBCASE("the truncated simplex category") {
    const auto D = builtin("delta_le_2").category;
    const auto& c = D.cat();
    CHECK(c.object_count() == 3);
    const int expected[3][3] = {{1, 2, 3}, {1, 3, 6}, {1, 4, 10}};
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) CHECK(hom_size(c, std::to_string(p), std::to_string(q)) == expected[p][q]);
  }
  SUBCASE("the orbit category of the group of order 2") {
    const auto O = builtin("orbit_Z2_degH").category;
    const auto& c = O.cat();
    CHECK(c.object_count() == 2);
    CHECK(hom_size(c, "G/e", "G/e") == 2);
    CHECK(hom_size(c, "G/e", "G/G") == 1);
    CHECK(hom_size(c, "G/G", "G/e") == 0);
    CHECK(hom_size(c, "G/G", "G/G") == 1);
    CHECK(O.degree(c.object_index("G/e")) == 1);
    CHECK(O.degree(c.object_index("G/G")) == 2);
  }
  SUBCASE("unknown names") {
    try {
      builtin("no_such_entry");
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownEntry);
    }
  }
  SUBCASE("the registry lists every entry once") {
    auto names = builtin_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    CHECK(names.size() == all_builtins().size());
  }
}

TEST_CASE("small enumerations") {
  SUBCASE("one object, one morphism") {
    const auto all = enumerate_small(1, 1);
    REQUIRE(all.size() == 1);
    CHECK(all[0].cat().morphism_count() == 1);
    CHECK(all[0].degree(0) == 0);
  }
  SUBCASE("monoids of order 2") {
    int two = 0;
    for (const auto& C : enumerate_small(1, 2))
      if (C.cat().morphism_count() == 2) ++two;
    CHECK(two == 2);
  }
  SUBCASE("monoids up to isomorphism: 1, 2, 7, 35") {
    std::vector<int> by_order(5);
    for_each_small_category(1, 4, true, [&](const FinCategory& C) { ++by_order[C.morphism_count()]; });
    CHECK(by_order == std::vector<int>{0, 1, 2, 7, 35});
  }
  SUBCASE("labeled monoid tables are the orbits of the iso classes") {
    for (int n = 1; n <= 4; ++n) {
      long long labeled = 0, from_orbits = 0;
      for_each_small_category(1, n, false, [&](const FinCategory& C) { labeled += C.morphism_count() == n; });
      for_each_small_category(1, n, true, [&](const FinCategory& C) {
        if (C.morphism_count() == n) from_orbits += factorial(n - 1) / automorphisms(C);
      });
      CHECK(labeled == from_orbits);
    }
  }
  SUBCASE("the two-object enumeration contains the familiar categories") {
    bool iso = false, arrow = false;
    for (const auto& C : enumerate_small(2, 4)) {
      const auto& c = C.cat();
      if (c.object_count() != 2) continue;
      const int h01 = static_cast<int>(c.hom(0, 1).size()), h10 = static_cast<int>(c.hom(1, 0).size());
      iso = iso || (c.morphism_count() == 4 && h01 == 1 && h10 == 1);
      arrow = arrow || (c.morphism_count() == 3 && h01 + h10 == 1);
    }
    CHECK(iso);
    CHECK(arrow);
  }
  SUBCASE("bounds are enforced") {
    CHECK_THROWS_AS(enumerate_small(4, 4), Error);
    CHECK_THROWS_AS(enumerate_small(2, 8), Error);
  }
}

TEST_CASE("the (2, 4) enumeration matches its golden file") {
  std::ostringstream now;
  for (const auto& C : enumerate_small(2, 4)) now << serialize(C) << '\n';
  const std::string path = std::string(REEDY_TEST_DATA_DIR) + "/golden/enumerate_2_4.txt";
  if (std::getenv("REEDY_UPDATE_GOLDEN")) {
    std::ofstream(path) << now.str();
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(golden.str() == now.str());
}

TEST_CASE("random diagrams") {
  const auto D = truncated_simplex(2);
  std::mt19937_64 a(99), b(99);
  for (int t = 0; t < 20; ++t) {
    const auto X = random_diagram(D.shared_cat(), a);
    CHECK(X == random_diagram(D.shared_cat(), b));
    for (ObjectIndex x = 0; x < D.cat().object_count(); ++x) CHECK(X.size(x) <= 3);
  }
  int produced = 0;
  for (int t = 0; t < 20; ++t) {
    const auto m = random_diagram_map(D.shared_cat(), a, 2);
    if (!m) continue;
    ++produced;
    for (ObjectIndex x = 0; x < D.cat().object_count(); ++x) {
      CHECK(m->source().size(x) <= 2);
      CHECK(m->target().size(x) <= 2);
    }
  }
  CHECK(produced > 0);
}
