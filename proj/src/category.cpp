#include "reedy/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace reedy {

namespace {

std::string name_or_index(const CategoryTable& t, MorphismIndex f) {
  if (f >= 0 && f < static_cast<int>(t.morphisms.size())) return t.morphisms[f].id;
  return "#" + std::to_string(f);
}

std::string triple(const CategoryTable& t, MorphismIndex h, MorphismIndex g, MorphismIndex f) {
  return "(" + name_or_index(t, h) + ", " + name_or_index(t, g) + ", " + name_or_index(t, f) + ")";
}

}  // namespace

std::vector<Violation> find_violations(const CategoryTable& t) {
  std::vector<Violation> out;
  const int n = static_cast<int>(t.objects.size());
  const int m = static_cast<int>(t.morphisms.size());
  if (static_cast<int>(t.identity.size()) != n ||
      t.table.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    out.push_back({ErrorKind::MalformedInput, "identity or composition table has the wrong size"});
    return out;
  }

  std::set<std::string> seen;
  for (const auto& x : t.objects)
    if (!seen.insert(x).second) out.push_back({ErrorKind::DuplicateIdentifier, "duplicate object id '" + x + "'"});
  seen.clear();
  for (const auto& r : t.morphisms)
    if (!seen.insert(r.id).second) out.push_back({ErrorKind::DuplicateIdentifier, "duplicate morphism id '" + r.id + "'"});

  bool typed = true;
  for (const auto& r : t.morphisms) {
    if (r.src < 0 || r.src >= n || r.tgt < 0 || r.tgt >= n) {
      out.push_back({ErrorKind::DanglingReference, "morphism '" + r.id + "' has an unknown endpoint"});
      typed = false;
    }
  }
  if (!typed) return out;

  for (int x = 0; x < n; ++x) {
    const MorphismIndex i = t.identity[x];
    if (i < 0 || i >= m) {
      out.push_back({ErrorKind::MissingIdentity, "object '" + t.objects[x] + "' has no identity"});
    } else if (t.morphisms[i].src != x || t.morphisms[i].tgt != x) {
      out.push_back({ErrorKind::MissingIdentity,
                     "identity '" + t.morphisms[i].id + "' is not an endomorphism of '" + t.objects[x] + "'"});
    }
  }

  auto at = [&](MorphismIndex g, MorphismIndex f) { return t.table[static_cast<std::size_t>(g) * m + f]; };
  std::vector<bool> usable(static_cast<std::size_t>(m) * m, false);
  for (MorphismIndex g = 0; g < m; ++g) {
    for (MorphismIndex f = 0; f < m; ++f) {
      const MorphismIndex c = at(g, f);
      const bool composable = t.morphisms[f].tgt == t.morphisms[g].src;
      if (!composable) {
        if (c != kNoIndex)
          out.push_back({ErrorKind::IllTypedComposite,
                         "composite given for non-composable pair (" + t.morphisms[g].id + ", " + t.morphisms[f].id + ")"});
        continue;
      }
      if (c == kNoIndex) {
        out.push_back({ErrorKind::NonTotalComposition,
                       "no composite for composable pair (" + t.morphisms[g].id + ", " + t.morphisms[f].id + ")"});
      } else if (c < 0 || c >= m) {
        out.push_back({ErrorKind::DanglingReference,
                       "composite of (" + t.morphisms[g].id + ", " + t.morphisms[f].id + ") is not a morphism"});
      } else if (t.morphisms[c].src != t.morphisms[f].src || t.morphisms[c].tgt != t.morphisms[g].tgt) {
        out.push_back({ErrorKind::IllTypedComposite, "composite '" + t.morphisms[c].id + "' of (" +
                                                         t.morphisms[g].id + ", " + t.morphisms[f].id +
                                                         ") has the wrong source or target"});
      } else {
        usable[static_cast<std::size_t>(g) * m + f] = true;
      }
    }
  }
  auto ok = [&](MorphismIndex g, MorphismIndex f) { return usable[static_cast<std::size_t>(g) * m + f]; };

  for (MorphismIndex f = 0; f < m; ++f) {
    const MorphismIndex left = t.identity[t.morphisms[f].tgt];
    const MorphismIndex right = t.identity[t.morphisms[f].src];
    if (left >= 0 && left < m && ok(left, f) && at(left, f) != f)
      out.push_back({ErrorKind::UnitLawViolation, "id∘f ≠ f for " + triple(t, left, f, f)});
    if (right >= 0 && right < m && ok(f, right) && at(f, right) != f)
      out.push_back({ErrorKind::UnitLawViolation, "f∘id ≠ f for " + triple(t, f, right, f)});
  }

  for (MorphismIndex f = 0; f < m; ++f) {
    for (MorphismIndex g = 0; g < m; ++g) {
      if (!ok(g, f)) continue;
      const MorphismIndex gf = at(g, f);
      for (MorphismIndex h = 0; h < m; ++h) {
        if (!ok(h, g) || !ok(h, gf)) continue;
        const MorphismIndex hg = at(h, g);
        if (!ok(hg, f)) continue;
        if (at(h, gf) != at(hg, f))
          out.push_back({ErrorKind::AssociativityViolation, "h∘(g∘f) ≠ (h∘g)∘f for " + triple(t, h, g, f)});
      }
    }
  }
  return out;
}

FinCategory FinCategory::from_table(CategoryTable t) {
  if (auto violations = find_violations(t); !violations.empty()) throw ValidationError(std::move(violations));

  const int n = static_cast<int>(t.objects.size());
  const int m = static_cast<int>(t.morphisms.size());

  std::vector<int> obj_order(n);
  std::iota(obj_order.begin(), obj_order.end(), 0);
  std::sort(obj_order.begin(), obj_order.end(), [&](int a, int b) { return t.objects[a] < t.objects[b]; });
  std::vector<int> obj_new(n);
  for (int i = 0; i < n; ++i) obj_new[obj_order[i]] = i;

  std::vector<int> mor_order(m);
  std::iota(mor_order.begin(), mor_order.end(), 0);
  std::sort(mor_order.begin(), mor_order.end(), [&](int a, int b) {
    const auto& ra = t.morphisms[a];
    const auto& rb = t.morphisms[b];
    const int sa = obj_new[ra.src], sb = obj_new[rb.src];
    if (sa != sb) return sa < sb;
    const int ta = obj_new[ra.tgt], tb = obj_new[rb.tgt];
    if (ta != tb) return ta < tb;
    return ra.id < rb.id;
  });
  std::vector<int> mor_new(m);
  for (int i = 0; i < m; ++i) mor_new[mor_order[i]] = i;

  FinCategory C;
  C.objects_.resize(n);
  for (int i = 0; i < n; ++i) C.objects_[i] = std::move(t.objects[obj_order[i]]);
  C.morphisms_.resize(m);
  for (int i = 0; i < m; ++i) {
    auto& r = t.morphisms[mor_order[i]];
    C.morphisms_[i] = MorphismRecord{std::move(r.id), obj_new[r.src], obj_new[r.tgt]};
  }
  C.identity_.resize(n);
  for (int x = 0; x < n; ++x) C.identity_[obj_new[x]] = mor_new[t.identity[x]];
  C.table_.assign(static_cast<std::size_t>(m) * m, kNoIndex);
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const MorphismIndex c = t.table[static_cast<std::size_t>(g) * m + f];
      if (c != kNoIndex) C.table_[static_cast<std::size_t>(mor_new[g]) * m + mor_new[f]] = mor_new[c];
    }

  C.all_.resize(m);
  std::iota(C.all_.begin(), C.all_.end(), 0);
  C.hom_offset_.assign(static_cast<std::size_t>(n) * n + 1, 0);
  for (const auto& r : C.morphisms_) ++C.hom_offset_[static_cast<std::size_t>(r.src) * n + r.tgt + 1];
  for (std::size_t i = 1; i < C.hom_offset_.size(); ++i) C.hom_offset_[i] += C.hom_offset_[i - 1];

  C.by_name_ = C.all_;
  std::sort(C.by_name_.begin(), C.by_name_.end(),
            [&](int a, int b) { return C.morphisms_[a].id < C.morphisms_[b].id; });
  return C;
}

std::span<const MorphismIndex> FinCategory::hom(ObjectIndex x, ObjectIndex y) const {
  const std::size_t n = objects_.size();
  const std::size_t cell = static_cast<std::size_t>(x) * n + y;
  const int begin = hom_offset_[cell];
  const int end = hom_offset_[cell + 1];
  return std::span<const MorphismIndex>(all_).subspan(begin, end - begin);
}

std::optional<ObjectIndex> FinCategory::find_object(std::string_view id) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == objects_.end() || *it != id) return std::nullopt;
  return static_cast<ObjectIndex>(it - objects_.begin());
}

std::optional<MorphismIndex> FinCategory::find_morphism(std::string_view id) const {
  auto it = std::lower_bound(by_name_.begin(), by_name_.end(), id,
                             [&](int a, std::string_view b) { return morphisms_[a].id < b; });
  if (it == by_name_.end() || morphisms_[*it].id != id) return std::nullopt;
  return *it;
}

ObjectIndex FinCategory::object_index(std::string_view id) const {
  if (auto x = find_object(id)) return *x;
  fail(ErrorKind::UnknownObject, "no object '" + std::string(id) + "'");
}

MorphismIndex FinCategory::morphism_index(std::string_view id) const {
  if (auto f = find_morphism(id)) return *f;
  fail(ErrorKind::UnknownMorphism, "no morphism '" + std::string(id) + "'");
}

std::optional<MorphismIndex> FinCategory::inverse(MorphismIndex f) const {
  for (MorphismIndex g : hom(tgt(f), src(f)))
    if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(tgt(f))) return g;
  return std::nullopt;
}

CategoryTable FinCategory::table() const {
  return CategoryTable{objects_, morphisms_, identity_, table_};
}

FinCategory validate_category(const CategoryPresentation& p) {
  std::vector<Violation> issues;
  CategoryTable t;
  std::map<std::string, int> obj_index;
  for (const auto& o : p.objects) {
    if (obj_index.count(o.id)) {
      issues.push_back({ErrorKind::DuplicateIdentifier, "duplicate object id '" + o.id + "'"});
      continue;
    }
    obj_index[o.id] = static_cast<int>(t.objects.size());
    t.objects.push_back(o.id);
  }
  std::map<std::string, int> mor_index;
  for (const auto& a : p.morphisms) {
    if (mor_index.count(a.id)) {
      issues.push_back({ErrorKind::DuplicateIdentifier, "duplicate morphism id '" + a.id + "'"});
      continue;
    }
    auto s = obj_index.find(a.src);
    auto g = obj_index.find(a.tgt);
    if (s == obj_index.end() || g == obj_index.end()) {
      issues.push_back({ErrorKind::DanglingReference, "morphism '" + a.id + "' refers to an unknown object"});
      continue;
    }
    mor_index[a.id] = static_cast<int>(t.morphisms.size());
    t.morphisms.push_back({a.id, s->second, g->second});
  }

  const int n = static_cast<int>(t.objects.size());
  const int m = static_cast<int>(t.morphisms.size());
  t.identity.assign(n, kNoIndex);
  for (const auto& [obj, mor] : p.identities) {
    auto o = obj_index.find(obj);
    auto f = mor_index.find(mor);
    if (o == obj_index.end() || f == mor_index.end()) {
      issues.push_back({ErrorKind::DanglingReference, "identity entry '" + obj + "' -> '" + mor + "' is dangling"});
      continue;
    }
    if (t.identity[o->second] != kNoIndex && t.identity[o->second] != f->second) {
      issues.push_back({ErrorKind::DuplicateIdentifier, "object '" + obj + "' has two identities"});
      continue;
    }
    t.identity[o->second] = f->second;
  }
  for (int x = 0; x < n; ++x)
    if (t.identity[x] == kNoIndex) issues.push_back({ErrorKind::MissingIdentity, "object '" + t.objects[x] + "' has no identity"});

  t.table.assign(static_cast<std::size_t>(m) * m, kNoIndex);
  for (const auto& c : p.composition) {
    auto g = mor_index.find(c.g);
    auto f = mor_index.find(c.f);
    auto r = mor_index.find(c.composite);
    if (g == mor_index.end() || f == mor_index.end() || r == mor_index.end()) {
      issues.push_back({ErrorKind::DanglingReference,
                        "composition entry [" + c.g + ", " + c.f + ", " + c.composite + "] is dangling"});
      continue;
    }
    auto& slot = t.table[static_cast<std::size_t>(g->second) * m + f->second];
    if (slot != kNoIndex && slot != r->second) {
      issues.push_back({ErrorKind::IllTypedComposite, "pair (" + c.g + ", " + c.f + ") has two different composites"});
      continue;
    }
    slot = r->second;
  }

  if (!issues.empty()) {
    // Identity slots are needed before the table can be checked meaningfully.
    if (std::any_of(t.identity.begin(), t.identity.end(), [](int i) { return i == kNoIndex; })) throw ValidationError(std::move(issues));
  }
  auto more = find_violations(t);
  issues.insert(issues.end(), more.begin(), more.end());
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return FinCategory::from_table(std::move(t));
}

DegreedCategory::DegreedCategory(FinCategory cat, std::vector<int> degrees)
    : DegreedCategory(std::make_shared<const FinCategory>(std::move(cat)), std::move(degrees)) {}

DegreedCategory::DegreedCategory(std::shared_ptr<const FinCategory> cat, std::vector<int> degrees)
    : cat_(std::move(cat)), degrees_(std::move(degrees)) {
  if (static_cast<int>(degrees_.size()) != cat_->object_count())
    fail(ErrorKind::MalformedInput, "degree assignment does not cover every object");
  for (int d : degrees_)
    if (d < 0) fail(ErrorKind::MalformedInput, "degrees must be non-negative");
}

int DegreedCategory::max_degree() const {
  int best = -1;
  for (int d : degrees_) best = std::max(best, d);
  return best;
}

DegreedCategory validate_degreed_category(const CategoryPresentation& p) {
  FinCategory cat = validate_category(p);
  std::vector<int> degrees(cat.object_count(), 0);
  for (const auto& o : p.objects) {
    if (!o.degree) fail(ErrorKind::MalformedInput, "object '" + o.id + "' has no degree");
    if (*o.degree < 0 || *o.degree > 1'000'000'000) fail(ErrorKind::MalformedInput, "object '" + o.id + "' has an invalid degree");
    degrees[cat.object_index(o.id)] = static_cast<int>(*o.degree);
  }
  return DegreedCategory(std::move(cat), std::move(degrees));
}

CategoryPresentation to_presentation(const DegreedCategory& D) {
  const FinCategory& C = D.cat();
  CategoryPresentation p;
  for (ObjectIndex x = 0; x < C.object_count(); ++x) p.objects.push_back({C.object_id(x), D.degree(x)});
  for (MorphismIndex f : C.morphisms())
    p.morphisms.push_back({C.morphism_id(f), C.object_id(C.src(f)), C.object_id(C.tgt(f))});
  for (ObjectIndex x = 0; x < C.object_count(); ++x) p.identities.emplace_back(C.object_id(x), C.morphism_id(C.identity(x)));
  for (MorphismIndex g : C.morphisms())
    for (MorphismIndex f : C.morphisms())
      if (C.composable(g, f)) p.composition.push_back({C.morphism_id(g), C.morphism_id(f), C.morphism_id(C.compose(g, f))});
  return p;
}

FinCategory opposite(const FinCategory& C) {
  CategoryTable t = C.table();
  const std::size_t m = t.morphisms.size();
  for (auto& r : t.morphisms) std::swap(r.src, r.tgt);
  std::vector<MorphismIndex> flipped(m * m, kNoIndex);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) flipped[f * m + g] = t.table[g * m + f];
  t.table = std::move(flipped);
  return FinCategory::from_table(std::move(t));
}

DegreedCategory opposite(const DegreedCategory& C) {
  return DegreedCategory(opposite(C.cat()), std::vector<int>(C.degrees().begin(), C.degrees().end()));
}

std::optional<Subcategory> subcategory(const FinCategory& C, const std::vector<bool>& objects,
                                       const std::vector<bool>& morphisms) {
  Subcategory out;
  std::vector<int> obj_new(C.object_count(), kNoIndex);
  std::vector<int> mor_new(C.morphism_count(), kNoIndex);
  CategoryTable t;
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    if (!objects[x]) continue;
    if (!morphisms[C.identity(x)]) return std::nullopt;
    obj_new[x] = static_cast<int>(t.objects.size());
    t.objects.push_back(C.object_id(x));
    out.object_origin.push_back(x);
  }
  for (MorphismIndex f : C.morphisms()) {
    if (!morphisms[f]) continue;
    if (obj_new[C.src(f)] == kNoIndex || obj_new[C.tgt(f)] == kNoIndex) return std::nullopt;
    mor_new[f] = static_cast<int>(t.morphisms.size());
    t.morphisms.push_back({C.morphism_id(f), obj_new[C.src(f)], obj_new[C.tgt(f)]});
    out.morphism_origin.push_back(f);
  }
  const std::size_t m = t.morphisms.size();
  t.table.assign(m * m, kNoIndex);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const MorphismIndex g = out.morphism_origin[i];
      const MorphismIndex f = out.morphism_origin[j];
      if (!C.composable(g, f)) continue;
      const MorphismIndex c = C.compose(g, f);
      if (mor_new[c] == kNoIndex) return std::nullopt;
      t.table[i * m + j] = mor_new[c];
    }
  for (ObjectIndex x : out.object_origin) t.identity.push_back(mor_new[C.identity(x)]);
  // Canonical order of the subcategory agrees with the parent's, so the
  // origin vectors stay aligned with the new indices.
  out.cat = std::make_shared<const FinCategory>(FinCategory::from_table(std::move(t)));
  return out;
}

DegreedCategory full_subcategory(const DegreedCategory& C, int max_degree) {
  const FinCategory& cat = C.cat();
  std::vector<bool> objects(cat.object_count());
  for (ObjectIndex x = 0; x < cat.object_count(); ++x) objects[x] = C.degree(x) < max_degree;
  std::vector<bool> morphisms(cat.morphism_count());
  for (MorphismIndex f : cat.morphisms()) morphisms[f] = objects[cat.src(f)] && objects[cat.tgt(f)];
  auto sub = subcategory(cat, objects, morphisms);
  std::vector<int> degrees;
  for (ObjectIndex x : sub->object_origin) degrees.push_back(C.degree(x));
  return DegreedCategory(sub->cat, std::move(degrees));
}

}  // namespace reedy

namespace reedy {

CategoryBuilder& CategoryBuilder::object(std::string id, int degree, std::string identity_id) {
  if (identity_id.empty()) identity_id = "id_" + id;
  p_.morphisms.push_back({identity_id, id, id});
  p_.identities.emplace_back(id, identity_id);
  p_.objects.push_back({std::move(id), degree});
  return *this;
}

CategoryBuilder& CategoryBuilder::arrow(std::string id, std::string src, std::string tgt) {
  p_.morphisms.push_back({std::move(id), std::move(src), std::move(tgt)});
  return *this;
}

CategoryBuilder& CategoryBuilder::composite(std::string g, std::string f, std::string gf) {
  p_.composition.push_back({std::move(g), std::move(f), std::move(gf)});
  return *this;
}

DegreedCategory CategoryBuilder::build() const {
  CategoryPresentation p = p_;
  std::map<std::string, std::string> identity_of(p.identities.begin(), p.identities.end());
  for (const auto& a : p_.morphisms) {
    auto s = identity_of.find(a.src);
    auto t = identity_of.find(a.tgt);
    if (s == identity_of.end() || t == identity_of.end()) continue;  // reported by validation
    p.composition.push_back({t->second, a.id, a.id});
    if (s->second != a.id || t->second != a.id) p.composition.push_back({a.id, s->second, a.id});
  }
  return validate_degreed_category(p);
}

}  // namespace reedy
