#include "reedy/json_io.hpp"

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace reedy::io {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  fail(ErrorKind::MalformedInput, where + ": " + what);
}

void expect_keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) malformed(where, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) malformed(where, std::string("missing field '") + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) malformed(where, "unknown field '" + key + "'");
}

const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) malformed(where, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array");
  return j;
}

const Json& as_object(const Json& j, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object");
  return j;
}

// A triple of identifiers [a, b, c].
std::array<std::string, 3> triple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) malformed(where, "expected an array of three identifiers");
  return {as_string(j[0], where), as_string(j[1], where), as_string(j[2], where)};
}

DegreedCategory read_shape(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return read_category(load_json(base_dir / j.get<std::string>()));
  return read_category(j);
}

std::vector<std::vector<std::string>> read_sets(const Json& j, const FinCategory& C, const std::string& where) {
  as_object(j, where);
  std::vector<std::vector<std::string>> sets(C.object_count());
  std::vector<bool> seen(C.object_count());
  for (const auto& [id, elems] : j.items()) {
    const ObjectIndex x = C.object_index(id);
    seen[x] = true;
    std::set<std::string> distinct;
    for (const auto& e : as_array(elems, where + "." + id)) {
      const auto& name = as_string(e, where + "." + id);
      if (!distinct.insert(name).second)
        fail(ErrorKind::DuplicateIdentifier, where + "." + id + ": duplicate element '" + name + "'");
      sets[x].push_back(name);
    }
  }
  for (ObjectIndex x = 0; x < C.object_count(); ++x)
    if (!seen[x]) malformed(where, "no set for object '" + C.object_id(x) + "'");
  return sets;
}

// Element-to-element mapping from set `from` into set `to`, total on `from`.
std::vector<int> read_mapping(const Json& j, const std::vector<std::string>& from, const std::vector<std::string>& to,
                              const std::string& where) {
  as_object(j, where);
  std::map<std::string, int> from_index, to_index;
  for (std::size_t i = 0; i < from.size(); ++i) from_index[from[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < to.size(); ++i) to_index[to[i]] = static_cast<int>(i);
  std::vector<int> out(from.size(), kNoIndex);
  for (const auto& [a, b] : j.items()) {
    auto fa = from_index.find(a);
    if (fa == from_index.end()) malformed(where, "unknown source element '" + a + "'");
    auto tb = to_index.find(as_string(b, where));
    if (tb == to_index.end()) malformed(where, "unknown target element '" + b.get<std::string>() + "'");
    out[fa->second] = tb->second;
  }
  for (std::size_t i = 0; i < from.size(); ++i)
    if (out[i] == kNoIndex) malformed(where, "element '" + from[i] + "' is not mapped");
  return out;
}

SetDiagram read_sets_maps(const Json& j, const std::shared_ptr<const FinCategory>& shape, const std::string& where) {
  const FinCategory& C = *shape;
  auto sets = read_sets(j.at("sets"), C, where + ".sets");
  std::vector<std::vector<int>> maps(C.morphism_count());
  std::vector<bool> seen(C.morphism_count());
  for (const auto& [id, mapping] : as_object(j.at("maps"), where + ".maps").items()) {
    const MorphismIndex f = C.morphism_index(id);
    seen[f] = true;
    maps[f] = read_mapping(mapping, sets[C.src(f)], sets[C.tgt(f)], where + ".maps." + id);
  }
  for (MorphismIndex f : C.morphisms()) {
    if (seen[f]) continue;
    if (!C.is_identity(f)) malformed(where + ".maps", "no map for morphism '" + C.morphism_id(f) + "'");
    maps[f] = FinFunction::identity(static_cast<int>(sets[C.src(f)].size())).image;
  }
  return SetDiagram(shape, std::move(sets), std::move(maps));
}

Json write_sets_maps(const SetDiagram& X) {
  const FinCategory& C = X.shape();
  Json sets = Json::object();
  for (ObjectIndex x = 0; x < C.object_count(); ++x) sets[C.object_id(x)] = X.elements(x);
  Json maps = Json::object();
  for (MorphismIndex f : C.morphisms()) {
    Json m = Json::object();
    for (int a = 0; a < X.size(C.src(f)); ++a) m[X.elements(C.src(f))[a]] = X.elements(C.tgt(f))[X.apply(f, a)];
    maps[C.morphism_id(f)] = std::move(m);
  }
  Json out = Json::object();
  out["sets"] = std::move(sets);
  out["maps"] = std::move(maps);
  return out;
}

// Elements of a profunctor-like relation: each behaves like an arrow from an
// object of `target` to an object of `source`.
Profunctor read_profunctor(const Json& j, const std::shared_ptr<const FinCategory>& source,
                           const std::shared_ptr<const FinCategory>& target, const std::string& where) {
  expect_keys(j, where, {"elements"}, {"left", "right"});
  const FinCategory& S = *source;
  const FinCategory& T = *target;
  const auto at = [&](ObjectIndex d, ObjectIndex c) { return static_cast<std::size_t>(d) * S.object_count() + c; };
  std::vector<std::vector<std::string>> elements(static_cast<std::size_t>(T.object_count()) * S.object_count());
  struct Slot {
    ObjectIndex d, c;
    int index;
  };
  std::map<std::string, Slot> token;
  for (const auto& e : as_array(j.at("elements"), where + ".elements")) {
    expect_keys(e, where + ".elements", {"id", "src", "tgt"});
    const auto& id = as_string(e.at("id"), where + ".elements");
    const ObjectIndex d = T.object_index(as_string(e.at("src"), where + ".elements"));
    const ObjectIndex c = S.object_index(as_string(e.at("tgt"), where + ".elements"));
    if (token.count(id)) fail(ErrorKind::DuplicateIdentifier, where + ": duplicate element '" + id + "'");
    token[id] = {d, c, static_cast<int>(elements[at(d, c)].size())};
    elements[at(d, c)].push_back(id);
  }
  auto lookup = [&](const std::string& id, const std::string& w) {
    auto it = token.find(id);
    if (it == token.end()) malformed(w, "unknown element '" + id + "'");
    return it->second;
  };

  std::vector<std::vector<std::vector<int>>> left(S.morphism_count(), std::vector<std::vector<int>>(T.object_count()));
  std::vector<std::vector<std::vector<int>>> right(T.morphism_count(), std::vector<std::vector<int>>(S.object_count()));
  for (MorphismIndex k : S.morphisms())
    for (ObjectIndex d = 0; d < T.object_count(); ++d) left[k][d].assign(elements[at(d, S.src(k))].size(), kNoIndex);
  for (MorphismIndex l : T.morphisms())
    for (ObjectIndex c = 0; c < S.object_count(); ++c) right[l][c].assign(elements[at(T.tgt(l), c)].size(), kNoIndex);

  if (j.contains("left"))
    for (const auto& entry : as_array(j.at("left"), where + ".left")) {
      const auto [kid, hid, rid] = triple(entry, where + ".left");
      const MorphismIndex k = S.morphism_index(kid);
      const Slot h = lookup(hid, where + ".left"), r = lookup(rid, where + ".left");
      if (h.c != S.src(k) || r.c != S.tgt(k) || r.d != h.d) malformed(where + ".left", "entry [" + kid + ", " + hid + ", " + rid + "] is ill-typed");
      left[k][h.d][h.index] = r.index;
    }
  if (j.contains("right"))
    for (const auto& entry : as_array(j.at("right"), where + ".right")) {
      const auto [hid, lid, rid] = triple(entry, where + ".right");
      const MorphismIndex l = T.morphism_index(lid);
      const Slot h = lookup(hid, where + ".right"), r = lookup(rid, where + ".right");
      if (h.d != T.tgt(l) || r.d != T.src(l) || r.c != h.c) malformed(where + ".right", "entry [" + hid + ", " + lid + ", " + rid + "] is ill-typed");
      right[l][h.c][h.index] = r.index;
    }
  for (MorphismIndex k : S.morphisms())
    for (ObjectIndex d = 0; d < T.object_count(); ++d)
      for (std::size_t h = 0; h < left[k][d].size(); ++h) {
        if (left[k][d][h] != kNoIndex) continue;
        if (!S.is_identity(k)) malformed(where + ".left", "no action of '" + S.morphism_id(k) + "' on '" + elements[at(d, S.src(k))][h] + "'");
        left[k][d][h] = static_cast<int>(h);
      }
  for (MorphismIndex l : T.morphisms())
    for (ObjectIndex c = 0; c < S.object_count(); ++c)
      for (std::size_t h = 0; h < right[l][c].size(); ++h) {
        if (right[l][c][h] != kNoIndex) continue;
        if (!T.is_identity(l)) malformed(where + ".right", "no action of '" + T.morphism_id(l) + "' on '" + elements[at(T.tgt(l), c)][h] + "'");
        right[l][c][h] = static_cast<int>(h);
      }
  return Profunctor(source, target, std::move(elements), std::move(left), std::move(right));
}

Json write_profunctor(const Profunctor& H) {
  const FinCategory& S = H.source();
  const FinCategory& T = H.target();
  Json elements = Json::array(), left = Json::array(), right = Json::array();
  for (ObjectIndex d = 0; d < T.object_count(); ++d)
    for (ObjectIndex c = 0; c < S.object_count(); ++c)
      for (const auto& id : H.elements(d, c)) {
        Json e = Json::object();
        e["id"] = id;
        e["src"] = T.object_id(d);
        e["tgt"] = S.object_id(c);
        elements.push_back(std::move(e));
      }
  for (MorphismIndex k : S.morphisms()) {
    if (S.is_identity(k)) continue;
    for (ObjectIndex d = 0; d < T.object_count(); ++d)
      for (int h = 0; h < H.size(d, S.src(k)); ++h)
        left.push_back({S.morphism_id(k), H.elements(d, S.src(k))[h], H.elements(d, S.tgt(k))[H.act_left(k, d, h)]});
  }
  for (MorphismIndex l : T.morphisms()) {
    if (T.is_identity(l)) continue;
    for (ObjectIndex c = 0; c < S.object_count(); ++c)
      for (int h = 0; h < H.size(T.tgt(l), c); ++h)
        right.push_back({H.elements(T.tgt(l), c)[h], T.morphism_id(l), H.elements(T.src(l), c)[H.act_right(h, c, l)]});
  }
  Json out = Json::object();
  out["elements"] = std::move(elements);
  out["left"] = std::move(left);
  out["right"] = std::move(right);
  return out;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedInput, "cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::MalformedInput, path.string() + ": " + e.what());
  }
}

CategoryPresentation parse_category(const Json& j) {
  expect_keys(j, "category", {"objects", "morphisms", "identities", "composition"});
  CategoryPresentation p;
  for (const auto& o : as_array(j.at("objects"), "objects")) {
    expect_keys(o, "objects[]", {"id", "degree"});
    const Json& deg = o.at("degree");
    if (!deg.is_number_integer()) malformed("objects[]", "degree must be an integer");
    p.objects.push_back({as_string(o.at("id"), "objects[].id"), deg.get<long long>()});
  }
  for (const auto& m : as_array(j.at("morphisms"), "morphisms")) {
    expect_keys(m, "morphisms[]", {"id", "src", "tgt"});
    p.morphisms.push_back({as_string(m.at("id"), "morphisms[].id"), as_string(m.at("src"), "morphisms[].src"),
                           as_string(m.at("tgt"), "morphisms[].tgt")});
  }
  for (const auto& [obj, mor] : as_object(j.at("identities"), "identities").items())
    p.identities.emplace_back(obj, as_string(mor, "identities." + obj));
  for (const auto& c : as_array(j.at("composition"), "composition")) {
    const auto [g, f, gf] = triple(c, "composition[]");
    p.composition.push_back({g, f, gf});
  }
  return p;
}

DegreedCategory read_category(const Json& j) { return validate_degreed_category(parse_category(j)); }

Json write_category(const DegreedCategory& D) {
  const CategoryPresentation p = to_presentation(D);
  Json out = Json::object();
  Json objects = Json::array(), morphisms = Json::array(), identities = Json::object(), composition = Json::array();
  for (const auto& o : p.objects) {
    Json e = Json::object();
    e["id"] = o.id;
    e["degree"] = *o.degree;
    objects.push_back(std::move(e));
  }
  for (const auto& m : p.morphisms) {
    Json e = Json::object();
    e["id"] = m.id;
    e["src"] = m.src;
    e["tgt"] = m.tgt;
    morphisms.push_back(std::move(e));
  }
  for (const auto& [obj, mor] : p.identities) identities[obj] = mor;
  for (const auto& c : p.composition) composition.push_back({c.g, c.f, c.composite});
  out["objects"] = std::move(objects);
  out["morphisms"] = std::move(morphisms);
  out["identities"] = std::move(identities);
  out["composition"] = std::move(composition);
  return out;
}

ShapedDiagram read_diagram(const Json& j, const std::filesystem::path& base_dir) {
  expect_keys(j, "diagram", {"shape", "sets", "maps"});
  DegreedCategory shape = read_shape(j.at("shape"), base_dir);
  SetDiagram X = read_sets_maps(j, shape.shared_cat(), "diagram");
  return {std::move(shape), std::move(X)};
}

Json write_diagram(const SetDiagram& X, const DegreedCategory& shape) {
  Json out = Json::object();
  out["shape"] = write_category(shape);
  Json body = write_sets_maps(X);
  out["sets"] = std::move(body["sets"]);
  out["maps"] = std::move(body["maps"]);
  return out;
}

ShapedMap read_diagram_map(const Json& j, const std::filesystem::path& base_dir) {
  expect_keys(j, "diagram map", {"shape", "source", "target", "components"});
  DegreedCategory shape = read_shape(j.at("shape"), base_dir);
  const auto& C = shape.cat();
  expect_keys(j.at("source"), "source", {"sets", "maps"});
  expect_keys(j.at("target"), "target", {"sets", "maps"});
  SetDiagram A = read_sets_maps(j.at("source"), shape.shared_cat(), "source");
  SetDiagram B = read_sets_maps(j.at("target"), shape.shared_cat(), "target");
  std::vector<std::vector<int>> components(C.object_count());
  std::vector<bool> seen(C.object_count());
  for (const auto& [id, mapping] : as_object(j.at("components"), "components").items()) {
    const ObjectIndex x = C.object_index(id);
    seen[x] = true;
    components[x] = read_mapping(mapping, A.elements(x), B.elements(x), "components." + id);
  }
  for (ObjectIndex x = 0; x < C.object_count(); ++x)
    if (!seen[x]) malformed("components", "no component at '" + C.object_id(x) + "'");
  DiagramMap m(std::move(A), std::move(B), std::move(components));
  return {std::move(shape), std::move(m)};
}

Json write_diagram_map(const DiagramMap& m, const DegreedCategory& shape) {
  const FinCategory& C = shape.cat();
  Json out = Json::object();
  out["shape"] = write_category(shape);
  out["source"] = write_sets_maps(m.source());
  out["target"] = write_sets_maps(m.target());
  Json components = Json::object();
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    Json c = Json::object();
    for (int a = 0; a < m.source().size(x); ++a) c[m.source().elements(x)[a]] = m.target().elements(x)[m.component(x)[a]];
    components[C.object_id(x)] = std::move(c);
  }
  out["components"] = std::move(components);
  return out;
}

AbstractBigluingData read_bigluing(const Json& j, const std::filesystem::path& base_dir) {
  expect_keys(j, "bigluing data", {"base", "top", "U", "W", "alpha"});
  DegreedCategory base = read_shape(j.at("base"), base_dir);
  const auto top = read_shape(j.at("top"), base_dir).shared_cat();
  Profunctor U = read_profunctor(j.at("U"), top, base.shared_cat(), "U");
  Profunctor W = read_profunctor(j.at("W"), base.shared_cat(), top, "W");
  const FinCategory& C = base.cat();
  const FinCategory& D = *top;
  const int nc = C.object_count(), nd = D.object_count();

  std::map<std::string, std::pair<int, ObjectIndex>> u_token, w_token;  // global index, object of D
  int next = 0;
  for (ObjectIndex c = 0; c < nc; ++c)
    for (ObjectIndex d = 0; d < nd; ++d)
      for (const auto& id : U.elements(c, d)) u_token[id] = {next++, d};
  const int ut = next;
  next = 0;
  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c = 0; c < nc; ++c)
      for (const auto& id : W.elements(d, c)) w_token[id] = {next++, d};
  std::vector<std::vector<MorphismIndex>> alpha(next, std::vector<MorphismIndex>(ut, kNoIndex));
  for (const auto& entry : as_array(j.at("alpha"), "alpha")) {
    const auto [wid, uid, kid] = triple(entry, "alpha[]");
    auto w = w_token.find(wid);
    auto u = u_token.find(uid);
    if (w == w_token.end() || u == u_token.end()) malformed("alpha", "entry [" + wid + ", " + uid + ", " + kid + "] names an unknown element");
    if (w->second.second != u->second.second) malformed("alpha", "entry [" + wid + ", " + uid + "] pairs elements over different objects");
    alpha[w->second.first][u->second.first] = C.morphism_index(kid);
  }
  return AbstractBigluingData(std::move(base), top, std::move(U), std::move(W), std::move(alpha));
}

Json write_bigluing(const AbstractBigluingData& abd) {
  const FinCategory& C = abd.base().cat();
  const FinCategory& D = abd.top();
  Json out = Json::object();
  out["base"] = write_category(abd.base());
  out["top"] = write_category(DegreedCategory(abd.shared_top(), std::vector<int>(D.object_count(), 0)));
  out["U"] = write_profunctor(abd.U());
  out["W"] = write_profunctor(abd.W());
  Json alpha = Json::array();
  for (ObjectIndex d = 0; d < D.object_count(); ++d)
    for (ObjectIndex c2 = 0; c2 < C.object_count(); ++c2)
      for (int w = 0; w < abd.W().size(d, c2); ++w)
        for (ObjectIndex c = 0; c < C.object_count(); ++c)
          for (int u = 0; u < abd.U().size(c, d); ++u)
            alpha.push_back({abd.W().elements(d, c2)[w], abd.U().elements(c, d)[u],
                             C.morphism_id(abd.alpha(d, c2, w, c, u))});
  out["alpha"] = std::move(alpha);
  return out;
}

Json write_factorization(const Factorization& f, const FinCategory& C) {
  Json out = Json::object();
  out["first"] = C.morphism_id(f.first);
  out["mid"] = C.object_id(f.mid);
  out["second"] = C.morphism_id(f.second);
  return out;
}

Json write_witness(const Witness& w, const FinCategory& C) {
  Json out = Json::object();
  out["clause"] = w.clause;
  Json morphisms = Json::array();
  for (MorphismIndex f : w.morphisms) morphisms.push_back(C.morphism_id(f));
  out["morphisms"] = std::move(morphisms);
  Json facs = Json::array();
  for (const auto& f : w.factorizations) facs.push_back(write_factorization(f, C));
  out["factorizations"] = std::move(facs);
  if (w.object) out["object"] = C.object_id(*w.object);
  if (w.degree) out["degree"] = *w.degree;
  return out;
}

Json write_report(const ClassificationReport& report, const FinCategory& C) {
  Json verdicts = Json::object(), witnesses = Json::object();
  for (StructureClass c : kAllStructureClasses) {
    const std::string name(to_string(c));
    verdicts[name] = report.verdict(c);
    if (const auto& w = report.witness(c)) witnesses[name] = write_witness(*w, C);
  }
  Json out = Json::object();
  out["verdicts"] = std::move(verdicts);
  out["witnesses"] = std::move(witnesses);
  return out;
}

}  // namespace reedy::io
