// reedy: command-line front end for the reedy library.
//
// Exit status: 0 when the command succeeded and every queried property holds,
// 1 when the queried property is false, 2 on invalid input, 3 when a size or
// iteration guard trips, 4 on an internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "reedy/bigluing.hpp"
#include "reedy/classify.hpp"
#include "reedy/corpus.hpp"
#include "reedy/factorization.hpp"
#include "reedy/fs_reedy.hpp"
#include "reedy/json_io.hpp"
#include "reedy/limits.hpp"
#include "reedy/wfs.hpp"

namespace fs = std::filesystem;
using reedy::io::Json;

namespace {

enum Exit : int { kOk = 0, kPropertyFalse = 1, kInvalid = 2, kGuard = 3, kInternal = 4 };

struct Options {
  bool json = false;
  long long max_search = reedy::SearchBudget::kDefaultCap;
  std::uint64_t seed = 0;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string arrow(const reedy::FinCategory& C, reedy::MorphismIndex f) {
  return C.object_id(C.src(f)) + "→" + C.object_id(C.tgt(f));
}

reedy::DegreedCategory load_category(const std::string& path) {
  return reedy::io::read_category(reedy::io::load_json(path));
}

reedy::io::ShapedDiagram load_diagram(const std::string& path) {
  return reedy::io::read_diagram(reedy::io::load_json(path), fs::path(path).parent_path());
}

reedy::io::ShapedMap load_map(const std::string& path) {
  return reedy::io::read_diagram_map(reedy::io::load_json(path), fs::path(path).parent_path());
}

std::vector<bool> morphism_set(const reedy::FinCategory& C, const std::vector<std::string>& ids) {
  std::vector<bool> out(C.morphism_count());
  for (const auto& id : ids) out[C.morphism_index(id)] = true;
  for (reedy::ObjectIndex x = 0; x < C.object_count(); ++x) out[C.identity(x)] = true;
  return out;
}

int cmd_validate(const Options& o, const std::string& path) {
  const auto C = load_category(path);
  if (o.json) {
    Json j = Json::object();
    j["valid"] = true;
    j["objects"] = C.cat().object_count();
    j["morphisms"] = C.cat().morphism_count();
    emit(j);
  } else {
    std::cout << "valid: " << C.cat().object_count() << " objects, " << C.cat().morphism_count() << " morphisms\n";
  }
  return kOk;
}

int cmd_classify(const Options& o, const std::string& path, const std::string& query) {
  const auto cls = reedy::structure_class_from_string(query);
  if (!cls) reedy::fail(reedy::ErrorKind::MalformedInput, "unknown structure class '" + query + "'");
  const auto C = load_category(path);
  const auto report = reedy::classify(C);
  if (o.json) {
    emit(reedy::io::write_report(report, C.cat()));
  } else {
    for (auto c : reedy::kAllStructureClasses) {
      std::cout << reedy::to_string(c) << ": " << (report.verdict(c) ? "true" : "false");
      if (const auto& w = report.witness(c)) std::cout << "  (" << reedy::describe(*w, C.cat()) << ")";
      std::cout << '\n';
    }
  }
  return report.verdict(*cls) ? kOk : kPropertyFalse;
}

int cmd_factor(const Options& o, const std::string& path, const std::string& morphism, bool generalized) {
  const auto C = load_category(path);
  const auto& cat = C.cat();
  const auto f = cat.morphism_index(morphism);
  const auto fac =
      reedy::reedy_factor(C, f, generalized ? reedy::FactorMode::Generalized : reedy::FactorMode::Strict);
  if (o.json) {
    Json j = reedy::io::write_factorization(fac, cat);
    j = Json{{"morphism", morphism}, {"first", j["first"]}, {"mid", j["mid"]}, {"second", j["second"]}};
    emit(j);
  } else {
    std::cout << "(" << arrow(cat, fac.first) << ", " << arrow(cat, fac.second) << ")  " << morphism << " = "
              << cat.morphism_id(fac.second) << " ∘ " << cat.morphism_id(fac.first) << '\n';
  }
  return kOk;
}

int cmd_boundary(const Options& o, const std::string& path, const std::string& xs, const std::string& ys,
                 int delta) {
  const auto C = load_category(path);
  const auto& cat = C.cat();
  const auto b = reedy::boundary_hom(C, cat.object_index(xs), cat.object_index(ys), delta);
  if (o.json) {
    Json classes = Json::array();
    for (int k = 0; k < b.class_count(); ++k) {
      Json pairs = Json::array();
      for (std::size_t p = 0; p < b.pairs.size(); ++p)
        if (b.class_of[p] == k) pairs.push_back(reedy::io::write_factorization(b.pairs[p], cat));
      classes.push_back(Json{{"composite", cat.morphism_id(b.to_hom[k])}, {"pairs", std::move(pairs)}});
    }
    emit(Json{{"x", xs}, {"y", ys}, {"delta", delta}, {"classes", std::move(classes)}});
  } else {
    std::cout << "boundary hom (" << xs << ", " << ys << ") below degree " << delta << ": " << b.class_count()
              << " class(es)\n";
    for (int k = 0; k < b.class_count(); ++k) {
      const auto& rep = b.pairs[b.representative[k]];
      std::cout << "  [" << cat.morphism_id(rep.second) << " ∘ " << cat.morphism_id(rep.first) << "] ↦ "
                << cat.morphism_id(b.to_hom[k]) << '\n';
    }
  }
  return kOk;
}

int cmd_matching(const Options& o, const std::string& path, const std::string& object) {
  const auto [C, X] = load_diagram(path);
  const auto& cat = C.cat();
  const auto x = cat.object_index(object);
  const auto M = reedy::matching_object(C, x, X, o.max_search);
  Json families = Json::array();
  for (const auto& fam : M.families) {
    Json f = Json::object();
    for (std::size_t s = 0; s < M.index.size(); ++s)
      f[cat.morphism_id(M.index[s])] = X.elements(cat.tgt(M.index[s]))[fam[s]];
    families.push_back(std::move(f));
  }
  Json cone = Json::object();
  for (int a = 0; a < X.size(x); ++a) cone[X.elements(x)[a]] = M.cone(a);
  if (o.json) {
    emit(Json{{"object", object}, {"families", std::move(families)}, {"cone", std::move(cone)}});
  } else {
    std::cout << "matching object at " << object << ": " << M.size() << " element(s)\n";
    for (const auto& f : families) std::cout << "  " << f.dump() << '\n';
  }
  return kOk;
}

int cmd_latching(const Options& o, const std::string& path, const std::string& object) {
  const auto [C, X] = load_diagram(path);
  const auto& cat = C.cat();
  const auto x = cat.object_index(object);
  const auto L = reedy::latching_object(C, x, X);
  Json classes = Json::array();
  for (int k = 0; k < L.size(); ++k) {
    Json members = Json::array();
    for (std::size_t p = 0; p < L.pairs.size(); ++p) {
      if (L.classes.class_of[p] != k) continue;
      const auto [slot, a] = L.pairs[p];
      const auto f = L.index[slot];
      members.push_back(Json::array({cat.morphism_id(f), X.elements(cat.src(f))[a]}));
    }
    classes.push_back(Json{{"members", std::move(members)}, {"image", X.elements(x)[L.cocone(k)]}});
  }
  if (o.json) {
    emit(Json{{"object", object}, {"classes", std::move(classes)}});
  } else {
    std::cout << "latching object at " << object << ": " << L.size() << " class(es)\n";
    for (const auto& c : classes) std::cout << "  " << c["members"].dump() << " ↦ " << c["image"].get<std::string>() << '\n';
  }
  return kOk;
}

int cmd_collage(const Options& o, const std::string& path) {
  const auto abd = reedy::io::read_bigluing(reedy::io::load_json(path), fs::path(path).parent_path());
  const auto E = reedy::collage(abd);
  if (o.json) {
    emit(reedy::io::write_category(E));
  } else {
    std::cout << "collage: " << E.cat().object_count() << " objects, " << E.cat().morphism_count()
              << " morphisms\n";
    for (reedy::ObjectIndex x = 0; x < E.cat().object_count(); ++x)
      std::cout << "  " << E.cat().object_id(x) << " (degree " << E.degree(x) << ")\n";
  }
  return kOk;
}

int cmd_recognize(const Options& o, const std::string& path, int split) {
  const auto E = load_category(path);
  const auto abd = reedy::recognize_collage(E, split);
  if (o.json) {
    emit(reedy::io::write_bigluing(abd));
  } else {
    std::cout << "collage of " << abd.base().cat().object_count() << " base and " << abd.top().object_count()
              << " top object(s)\n";
  }
  return kOk;
}

int cmd_wfs_classify(const Options& o, const std::string& path, const std::string& structure,
                     const std::string& query) {
  if (structure != "reedy" && structure != "c-reedy")
    reedy::fail(reedy::ErrorKind::MalformedInput, "unknown structure '" + structure + "'");
  if (!query.empty() && query != "L" && query != "R")
    reedy::fail(reedy::ErrorKind::MalformedInput, "--class must be L or R");
  const auto [C, m] = load_map(path);
  const auto result = structure == "reedy" ? reedy::reedy_classify_map(C, m, o.max_search)
                                           : reedy::creedy_classify_map(C, m, o.max_search);
  if (o.json) {
    emit(Json{{"structure", structure}, {"L", result.cls.is_L}, {"R", result.cls.is_R}});
  } else {
    std::cout << structure << " L: " << (result.cls.is_L ? "true" : "false") << '\n'
              << structure << " R: " << (result.cls.is_R ? "true" : "false") << '\n';
  }
  if (query == "L") return result.cls.is_L ? kOk : kPropertyFalse;
  if (query == "R") return result.cls.is_R ? kOk : kPropertyFalse;
  return kOk;
}

int cmd_wfs_factor(const Options& o, const std::string& path) {
  const auto [C, m] = load_map(path);
  const auto f = reedy::reedy_factorize_map(C, m, o.max_search);
  if (o.json) {
    emit(Json{{"left", reedy::io::write_diagram_map(f.left, C)}, {"right", reedy::io::write_diagram_map(f.right, C)}});
  } else {
    const auto& E = f.left.target();
    std::cout << "middle diagram:\n";
    for (reedy::ObjectIndex x = 0; x < C.cat().object_count(); ++x) {
      std::cout << "  " << C.cat().object_id(x) << ": {";
      for (int a = 0; a < E.size(x); ++a) std::cout << (a ? ", " : "") << E.elements(x)[a];
      std::cout << "}\n";
    }
  }
  return kOk;
}

int cmd_lift(const Options& o, const std::vector<std::string>& paths) {
  auto left = load_map(paths[0]);
  auto right = load_map(paths[1]);
  auto top = load_map(paths[2]);
  auto bottom = load_map(paths[3]);
  const reedy::LiftingProblem p{std::move(left.map), std::move(right.map), std::move(top.map),
                                std::move(bottom.map)};
  reedy::validate_lifting_problem(p);
  const auto lift = reedy::solve_lifting(p, o.max_search);
  const auto& C = left.shape.cat();
  if (o.json) {
    Json j = Json::object();
    j["exists"] = lift.has_value();
    if (lift) {
      Json comps = Json::object();
      for (reedy::ObjectIndex x = 0; x < C.object_count(); ++x) {
        Json c = Json::object();
        for (std::size_t a = 0; a < (*lift)[x].size(); ++a)
          c[p.left.target().elements(x)[a]] = p.right.source().elements(x)[(*lift)[x][a]];
        comps[C.object_id(x)] = std::move(c);
      }
      j["diagonal"] = std::move(comps);
    }
    emit(j);
  } else {
    std::cout << (lift ? "lift exists\n" : "no lift\n");
  }
  return lift ? kOk : kPropertyFalse;
}

int cmd_fs_reduce(const Options& o, const std::string& path, const std::vector<std::string>& up_ids,
                  const std::vector<std::string>& down_ids) {
  const auto C = load_category(path);
  const auto& cat = C.cat();
  std::vector<bool> up, down;
  if (up_ids.empty() && down_ids.empty()) {
    auto classes = reedy::basic_classes(C);
    up = std::move(classes.up);
    down = std::move(classes.down);
  } else {
    up = morphism_set(cat, up_ids);
    down = morphism_set(cat, down_ids);
  }
  auto split = reedy::canonical_split(cat, up, down);
  if (!split) reedy::fail(reedy::ErrorKind::NotFsReedy, "some morphism has no (down, up) factorization");
  auto ff = reedy::derive_functorial_factorization(cat, std::move(*split));
  if (!ff) reedy::fail(reedy::ErrorKind::NotFsReedy, "the chosen factorizations are not functorial");
  const auto r = reedy::fs_reduce(C, up, down, *ff);
  Json objects = Json::array();
  for (auto x : r.objects) objects.push_back(cat.object_id(x));
  Json replacements = Json::array();
  for (const auto& rep : r.replacements)
    replacements.push_back(Json{{"object", cat.object_id(rep.object)},
                                {"target", cat.object_id(rep.target)},
                                {"to", cat.morphism_id(rep.to)},
                                {"from", cat.morphism_id(rep.from)}});
  const bool ok = r.equivalence && r.reduced_reedy.holds;
  if (o.json) {
    emit(Json{{"objects", std::move(objects)},
              {"replacements", std::move(replacements)},
              {"equivalence", r.equivalence},
              {"reduced_reedy", r.reduced_reedy.holds},
              {"supplied_classes_reedy", r.supplied_definitional.holds},
              {"reduced", reedy::io::write_category(r.reduced)}});
  } else {
    std::cout << "reduced objects: " << objects.dump() << '\n';
    for (const auto& rep : r.replacements)
      std::cout << "  " << cat.object_id(rep.object) << " ≅ " << cat.object_id(rep.target) << " via "
                << cat.morphism_id(rep.to) << ", " << cat.morphism_id(rep.from) << '\n';
    std::cout << "equivalence: " << (r.equivalence ? "true" : "false") << '\n'
              << "reduced category reedy: " << (r.reduced_reedy.holds ? "true" : "false") << '\n';
  }
  return ok ? kOk : kPropertyFalse;
}

int cmd_corpus_list(const Options& o) {
  if (o.json) {
    Json j = Json::array();
    for (const auto& e : reedy::all_builtins()) j.push_back(Json{{"name", e.name}, {"description", e.provenance}});
    emit(j);
  } else {
    for (const auto& e : reedy::all_builtins()) std::cout << e.name << "  " << e.provenance << '\n';
  }
  return kOk;
}

int cmd_corpus_emit(const std::string& name) {
  emit(reedy::io::write_category(reedy::builtin(name).category));
  return kOk;
}

int cmd_corpus_diagram(const Options& o, const std::string& name) {
  const auto entry = reedy::builtin(name);
  std::mt19937_64 rng(o.seed);
  emit(reedy::io::write_diagram(reedy::random_diagram(entry.category.shared_cat(), rng), entry.category));
  return kOk;
}

int exit_code(reedy::ErrorKind kind) {
  using K = reedy::ErrorKind;
  switch (kind) {
    case K::SizeGuardExceeded:
    case K::IterationGuardExceeded:
      return kGuard;
    case K::InternalInvariantBroken:
      return kInternal;
    case K::NotAlmostReedy:
    case K::NotACollage:
    case K::NotFsReedy:
      return kPropertyFalse;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide Reedy-type structure on finite categories and compute with finite-set diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit machine-readable JSON");
  app.add_option("--max-search", o.max_search, "Cap on candidate extensions in any search")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for random generation");

  std::string input, object, morphism, y_object, query = "reedy", structure = "reedy", name;
  std::vector<std::string> inputs, up, down;
  int delta = 0, split = 0;
  bool generalized = false;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "Check a category file");
  validate->add_option("category", input)->required();
  validate->callback([&] { run = [&] { return cmd_validate(o, input); }; });

  auto* classify = app.add_subcommand("classify", "Decide every structure class");
  classify->add_option("category", input)->required();
  classify->add_option("--class", query, "Class whose verdict sets the exit status")->capture_default_str();
  classify->callback([&] { run = [&] { return cmd_classify(o, input, query); }; });

  auto* factor = app.add_subcommand("factor", "Reedy factorization of one morphism");
  factor->add_option("category", input)->required();
  factor->add_option("--morphism", morphism)->required();
  factor->add_flag("--generalized", generalized, "Allow basic level middle parts");
  factor->callback([&] { run = [&] { return cmd_factor(o, input, morphism, generalized); }; });

  auto* boundary = app.add_subcommand("boundary", "Factorizations through objects below a degree");
  boundary->add_option("category", input)->required();
  boundary->add_option("--from", object)->required();
  boundary->add_option("--to", y_object)->required();
  boundary->add_option("--degree", delta)->required();
  boundary->callback([&] { run = [&] { return cmd_boundary(o, input, object, y_object, delta); }; });

  auto* matching = app.add_subcommand("matching", "Matching object of a diagram");
  matching->add_option("diagram", input)->required();
  matching->add_option("--object", object)->required();
  matching->callback([&] { run = [&] { return cmd_matching(o, input, object); }; });

  auto* latching = app.add_subcommand("latching", "Latching object of a diagram");
  latching->add_option("diagram", input)->required();
  latching->add_option("--object", object)->required();
  latching->callback([&] { run = [&] { return cmd_latching(o, input, object); }; });

  auto* collage = app.add_subcommand("collage", "Collage of bigluing data");
  collage->add_option("bigluing", input)->required();
  collage->callback([&] { run = [&] { return cmd_collage(o, input); }; });

  auto* recognize = app.add_subcommand("recognize", "Split a category as a collage");
  recognize->add_option("category", input)->required();
  recognize->add_option("--split-degree", split, "Objects of at most this degree form the base")->required();
  recognize->callback([&] { run = [&] { return cmd_recognize(o, input, split); }; });

  auto* wfs_classify = app.add_subcommand("wfs-classify", "Classify a map of diagrams");
  wfs_classify->add_option("map", input)->required();
  wfs_classify->add_option("--structure", structure, "reedy or c-reedy")->capture_default_str();
  std::string wfs_query;
  wfs_classify->add_option("--class", wfs_query, "L or R; sets the exit status");
  wfs_classify->callback([&] { run = [&] { return cmd_wfs_classify(o, input, structure, wfs_query); }; });

  auto* wfs_factor = app.add_subcommand("wfs-factor", "Factor a map of diagrams as L then R");
  wfs_factor->add_option("map", input)->required();
  wfs_factor->callback([&] { run = [&] { return cmd_wfs_factor(o, input); }; });

  auto* lift = app.add_subcommand("lift", "Solve a lifting problem");
  lift->add_option("maps", inputs, "left right top bottom")->required()->expected(4);
  lift->callback([&] { run = [&] { return cmd_lift(o, inputs); }; });

  auto* fs_reduce = app.add_subcommand("fs-reduce", "Reduce a functorially factored category");
  fs_reduce->add_option("category", input)->required();
  fs_reduce->add_option("--up", up, "Ids of the up class (default: basic classes)");
  fs_reduce->add_option("--down", down, "Ids of the down class");
  fs_reduce->callback([&] { run = [&] { return cmd_fs_reduce(o, input, up, down); }; });

  auto* corpus = app.add_subcommand("corpus", "Built-in example categories");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "List entries")->callback([&] { run = [&] { return cmd_corpus_list(o); }; });
  auto* emit_cmd = corpus->add_subcommand("emit", "Print an entry as a category file");
  emit_cmd->add_option("name", name)->required();
  emit_cmd->callback([&] { run = [&] { return cmd_corpus_emit(name); }; });
  auto* diagram_cmd = corpus->add_subcommand("diagram", "Print a random diagram over an entry");
  diagram_cmd->add_option("name", name)->required();
  diagram_cmd->callback([&] { run = [&] { return cmd_corpus_diagram(o, name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kInvalid;
  }

  try {
    return run();
  } catch (const reedy::ValidationError& e) {
    const auto& v = e.violations();
    std::cerr << "error: " << reedy::to_string(v.empty() ? e.kind() : v.front().kind) << ": "
              << (v.empty() ? e.what() : v.front().message) << '\n';
    return kInvalid;
  } catch (const reedy::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
