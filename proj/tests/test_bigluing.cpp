#include <doctest.h>

#include <random>

#include "reedy/bigluing.hpp"
#include "reedy/corpus.hpp"
#include "support.hpp"

using namespace reedy;
using reedy::test::hom_size;
using reedy::test::make_diagram;
using reedy::test::mor;
using reedy::test::obj;

namespace {

std::shared_ptr<const FinCategory> point(const std::string& name) {
  return CategoryBuilder().object(name, 0).build().shared_cat();
}

// C = {c}, D = {d}, U = {u}, W = {w}, w∘u = id_c.
AbstractBigluingData idempotent_data() {
  const DegreedCategory C = CategoryBuilder().object("c", 0).build();
  const auto D = point("d");
  Profunctor U(D, C.shared_cat(), {{"u"}}, {{{0}}}, {{{0}}});
  Profunctor W(C.shared_cat(), D, {{"w"}}, {{{0}}}, {{{0}}});
  return AbstractBigluingData(C, D, std::move(U), std::move(W), {{0}});
}

}  // namespace

TEST_CASE("collage over an empty base is the top category") {
  const DegreedCategory C;
  const auto D = point("d");
  Profunctor U(D, C.shared_cat(), {}, {{}}, {});
  Profunctor W(C.shared_cat(), D, {}, {}, {{}});
  const auto E = collage(AbstractBigluingData(C, D, std::move(U), std::move(W), {}));
  CHECK(E.cat() == *D);
  CHECK(E.degree(0) == 0);
}

TEST_CASE("the collage of a single composable pair carries an idempotent") {
  const auto E = collage(idempotent_data());
  const auto& e = E.cat();
  CHECK(e.object_count() == 2);
  CHECK(hom_size(e, "d", "d") == 2);
  CHECK(hom_size(e, "c", "c") == 1);
  CHECK(hom_size(e, "c", "d") == 1);
  CHECK(hom_size(e, "d", "c") == 1);
  const auto uw = e.compose(mor(e, "u"), mor(e, "w"));
  CHECK_FALSE(e.is_identity(uw));
  CHECK(e.compose(uw, uw) == uw);
  CHECK(e.compose(mor(e, "w"), mor(e, "u")) == e.identity(obj(e, "c")));
  CHECK(E.degree(obj(e, "d")) == 1);
}

TEST_CASE("malformed bigluing data is rejected") {
  const DegreedCategory C = builtin("z2_group").category;
  const auto D = point("d");
  Profunctor U(D, C.shared_cat(), {{"u"}}, {{{0}}}, {{{0}}, {{0}}});
  Profunctor W(C.shared_cat(), D, {{"w"}}, {{{0}}, {{0}}}, {{{0}}});
  // alpha(w, u) would have to satisfy t∘alpha = alpha = alpha∘t.
  try {
    AbstractBigluingData(C, D, U, W, {{0}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidBigluingData);
  }
}

TEST_CASE("recognition") {
  SUBCASE("bistratified categories split at their top degree") {
    enumerate_small(3, 5, {.up_to_iso = true, .max_degree = 2}, [](const DegreedCategory& E) {
      if (!check_bistratified(E).holds) return;
      CHECK_NOTHROW(recognize_collage(E, E.max_degree()));
    });
  }
  SUBCASE("the iso pair does not split at degree 1") {
    try {
      recognize_collage(builtin("iso_pair").category, 1);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotACollage);
    }
  }
  SUBCASE("the idempotent collage recovers its data") {
    const auto abd = idempotent_data();
    const auto back = recognize_collage(collage(abd), 1);
    CHECK(canonical_form(back) == canonical_form(abd));
    CHECK(collage(back) == collage(abd));
  }
}

TEST_CASE("splitting and merging diagrams on a collage") {
  const auto abd = idempotent_data();
  const auto E = collage(abd);
  SUBCASE("the constant singleton") {
    const auto X = constant_diagram(E.shared_cat(), 1);
    const auto parts = biglue_split(abd, X);
    REQUIRE(parts.phi.size() == 1);
    CHECK(parts.phi[0] == FinFunction{1, {0}});
    CHECK(parts.gamma[0] == FinFunction{1, {0}});
    CHECK(biglue_merge(abd, parts.M, parts.N, parts.phi, parts.gamma) == X);
  }
  SUBCASE("two points carried identically") {
    const auto X = make_diagram(E, {2, 2}, {{"u", {0, 1}}, {"w", {0, 1}}, {"<w;u>", {0, 1}}});
    const auto parts = biglue_split(abd, X);
    CHECK(parts.phi[0].domain() == 2);
    CHECK(parts.phi[0] == FinFunction::identity(2));
    CHECK(parts.gamma[0].domain() == 2);
    CHECK(parts.gamma[0].codomain == 2);
    CHECK(compose(parts.gamma[0], parts.phi[0]) == parts.alpha_bar[0]);
    CHECK(biglue_merge(abd, parts.M, parts.N, parts.phi, parts.gamma) == X);

    auto corrupted = parts.gamma;
    corrupted[0].image = {corrupted[0].image[1], corrupted[0].image[0]};
    try {
      biglue_merge(abd, parts.M, parts.N, parts.phi, corrupted);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FactorizationMismatch);
    }
  }
  SUBCASE("random diagrams round-trip") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
      const auto X = random_diagram(E.shared_cat(), rng);
      const auto parts = biglue_split(abd, X);
      CHECK(biglue_merge(abd, parts.M, parts.N, parts.phi, parts.gamma) == X);
    }
  }
}

TEST_CASE("collages of recognized categories round-trip") {
  std::mt19937_64 rng(3);
  for (const auto& entry : all_builtins()) {
    const auto& E = entry.category;
    if (!check_bistratified(E).holds || E.max_degree() < 1) continue;
    CAPTURE(entry.name);
    const auto abd = recognize_collage(E, E.max_degree());
    const auto E2 = collage(abd);
    const auto abd2 = recognize_collage(E2, E2.max_degree());
    CHECK(canonical_form(abd2) == canonical_form(abd));
    CHECK(collage(abd2) == E2);
    for (int t = 0; t < 5; ++t) {
      const auto X = random_diagram(E2.shared_cat(), rng, 2);
      const auto parts = biglue_split(abd, X);
      CHECK(biglue_merge(abd, parts.M, parts.N, parts.phi, parts.gamma) == X);
    }
  }
}
