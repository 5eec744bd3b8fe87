#include <doctest.h>

#include <random>

#include "reedy/corpus.hpp"
#include "reedy/json_io.hpp"
#include "support.hpp"

using namespace reedy;
using reedy::io::Json;

namespace {

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalInvariantBroken;
}

Json arrow_json() { return io::write_category(builtin("arrow").category); }

}  // namespace

TEST_CASE("category files round-trip") {
  for (const auto& entry : all_builtins()) {
    CAPTURE(entry.name);
    const Json j = io::write_category(entry.category);
    CHECK(io::read_category(j) == entry.category);
    CHECK(io::read_category(Json::parse(j.dump())) == entry.category);
  }
}

TEST_CASE("category files are read strictly") {
  SUBCASE("unknown top-level field") {
    Json j = arrow_json();
    j["comment"] = "x";
    CHECK(error_kind([&] { (void)io::read_category(j); }) == ErrorKind::MalformedInput);
  }
  SUBCASE("unknown object field") {
    Json j = arrow_json();
    j["objects"][0]["colour"] = 1;
    CHECK(error_kind([&] { (void)io::read_category(j); }) == ErrorKind::MalformedInput);
  }
  SUBCASE("non-integer degree") {
    Json j = arrow_json();
    j["objects"][0]["degree"] = 1.5;
    CHECK(error_kind([&] { (void)io::read_category(j); }) == ErrorKind::MalformedInput);
  }
  SUBCASE("composition entries are triples") {
    Json j = arrow_json();
    j["composition"][0] = Json::array({"id_0", "id_0"});
    CHECK(error_kind([&] { (void)io::read_category(j); }) == ErrorKind::MalformedInput);
  }
  SUBCASE("missing composites fail validation") {
    Json j = arrow_json();
    j["composition"].erase(1);
    CHECK(error_kind([&] { (void)io::read_category(j); }) == ErrorKind::NonTotalComposition);
  }
  SUBCASE("a file that is not JSON") {
    CHECK(error_kind([] { (void)io::load_json(REEDY_TEST_DATA_DIR "/data/not_json.txt"); }) ==
          ErrorKind::MalformedInput);
  }
}

TEST_CASE("diagram files round-trip") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"delta_le_2", "almost_reedy_square", "z2_group"}) {
    const auto C = builtin(name).category;
    for (int t = 0; t < 5; ++t) {
      const auto X = random_diagram(C.shared_cat(), rng, 3);
      const auto back = io::read_diagram(io::write_diagram(X, C), ".");
      CHECK(back.shape == C);
      CHECK(back.diagram == X);
    }
  }
}

TEST_CASE("diagram files") {
  const Json shape = arrow_json();
  SUBCASE("identity maps may be omitted") {
    const Json j = {{"shape", shape}, {"sets", {{"0", {"p"}}, {"1", {"q", "r"}}}}, {"maps", {{"a", {{"p", "r"}}}}}};
    const auto d = io::read_diagram(j, ".");
    CHECK(d.diagram.size(1) == 2);
    CHECK(d.diagram.apply(d.shape.cat().morphism_index("a"), 0) == 1);
  }
  SUBCASE("duplicate elements") {
    const Json j = {{"shape", shape}, {"sets", {{"0", {"p"}}, {"1", {"q", "q"}}}}, {"maps", {{"a", {{"p", "q"}}}}}};
    CHECK(error_kind([&] { (void)io::read_diagram(j, "."); }) == ErrorKind::DuplicateIdentifier);
  }
  SUBCASE("partial maps") {
    const Json j = {{"shape", shape}, {"sets", {{"0", {"p"}}, {"1", {"q"}}}}, {"maps", Json::object()}};
    CHECK(error_kind([&] { (void)io::read_diagram(j, "."); }) == ErrorKind::MalformedInput);
  }
  SUBCASE("shapes given by path") {
    const Json j = {{"shape", "data/almost_reedy_square.json"},
                    {"sets", {{"a", Json::array()}, {"b", Json::array()}, {"c", Json::array()}, {"d", Json::array()}}},
                    {"maps", {{"ab", Json::object()},
                              {"ac", Json::object()},
                              {"ad", Json::object()},
                              {"bd", Json::object()},
                              {"cd", Json::object()}}}};
    const auto d = io::read_diagram(j, REEDY_TEST_DATA_DIR);
    CHECK(d.shape == builtin("almost_reedy_square").category);
  }
}

TEST_CASE("diagram-map files round-trip") {
  std::mt19937_64 rng(8);
  const auto C = builtin("almost_reedy_square").category;
  for (int t = 0; t < 10; ++t) {
    const auto m = random_diagram_map(C.shared_cat(), rng, 2);
    REQUIRE(m);
    const auto back = io::read_diagram_map(io::write_diagram_map(*m, C), ".");
    CHECK(back.shape == C);
    CHECK(back.map == *m);
  }
}

TEST_CASE("bigluing files round-trip") {
  std::mt19937_64 rng(4);
  auto t = builtin("arrow").category.cat().table();
  for (auto& o : t.objects) o = "t" + o;
  for (auto& m : t.morphisms) m.id = "t" + m.id;
  const auto D = std::make_shared<const FinCategory>(FinCategory::from_table(std::move(t)));
  int checked = 0;
  for (const auto& name : {"arrow", "parallel_pair", "z2_group", "almost_reedy_square"}) {
    for (int k = 0; k < 3; ++k) {
      const auto abd = random_bigluing_data(builtin(name).category, D, rng, 2);
      if (!abd) continue;
      ++checked;
      const Json j = io::write_bigluing(*abd);
      CHECK(io::read_bigluing(Json::parse(j.dump()), ".") == *abd);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("reports") {
  const auto S = builtin("almost_reedy_square").category;
  const Json j = io::write_report(classify(S), S.cat());
  CHECK(j["verdicts"]["reedy"] == false);
  CHECK(j["verdicts"]["almost_reedy"] == true);
  REQUIRE(j["witnesses"].contains("reedy"));
  CHECK_FALSE(j["witnesses"].contains("almost_reedy"));
}
