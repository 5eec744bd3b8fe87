#include "reedy/limits.hpp"

#include <algorithm>
#include <numeric>

namespace reedy {

std::vector<Components> weighted_limit(const SetDiagram& W, const SetDiagram& X, long long max_search) {
  SearchBudget budget(max_search);
  NaturalSearchOptions opts;
  opts.budget = &budget;
  std::vector<Components> out;
  search_natural_maps(W, X, opts, [&](const Components& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Quotient quotient(int n, const std::vector<std::pair<int, int>>& identify) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [a, b] : identify) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  Quotient q;
  q.class_of.assign(n, -1);
  std::vector<int> class_of_root(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (class_of_root[r] == -1) {
      class_of_root[r] = q.class_count();
      q.representative.push_back(i);
    }
    q.class_of[i] = class_of_root[r];
  }
  return q;
}

namespace {

// Index of the same-named morphism in another category.
std::vector<MorphismIndex> match_by_id(const FinCategory& from, const FinCategory& to) {
  std::vector<MorphismIndex> out(from.morphism_count());
  for (MorphismIndex f : from.morphisms()) out[f] = to.morphism_index(from.morphism_id(f));
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Coend weighted_colimit(const SetDiagram& U, const SetDiagram& X) {
  const FinCategory& C = X.shape();
  const FinCategory& op = U.shape();
  if (C.object_count() != op.object_count()) fail(ErrorKind::MalformedInput, "weight and diagram shapes do not match");
  const auto op_of = match_by_id(C, op);
  Coend out;
  std::vector<std::vector<int>> start(C.object_count());
  for (ObjectIndex c = 0; c < C.object_count(); ++c) {
    start[c].resize(U.size(c));
    for (int u = 0; u < U.size(c); ++u) {
      start[c][u] = static_cast<int>(out.elements.size());
      for (int a = 0; a < X.size(c); ++a) out.elements.push_back({c, u, a});
    }
  }
  std::vector<std::pair<int, int>> identify;
  for (MorphismIndex k : C.morphisms()) {
    const ObjectIndex c = C.src(k), c2 = C.tgt(k);
    for (int u = 0; u < U.size(c2); ++u)
      for (int a = 0; a < X.size(c); ++a)
        identify.emplace_back(start[c][U.apply(op_of[k], u)] + a, start[c2][u] + X.apply(k, a));
  }
  out.classes = quotient(static_cast<int>(out.elements.size()), identify);
  return out;
}

LowerPart lower_part(const DegreedCategory& D, int delta) {
  const FinCategory& C = D.cat();
  std::vector<bool> objects(C.object_count()), morphisms(C.morphism_count());
  for (ObjectIndex x = 0; x < C.object_count(); ++x) objects[x] = D.degree(x) < delta;
  for (MorphismIndex f : C.morphisms()) morphisms[f] = objects[C.src(f)] && objects[C.tgt(f)];
  LowerPart low;
  low.delta = delta;
  low.sub = *subcategory(C, objects, morphisms);
  low.local_object.assign(C.object_count(), kNoIndex);
  low.local_morphism.assign(C.morphism_count(), kNoIndex);
  for (std::size_t i = 0; i < low.sub.object_origin.size(); ++i) low.local_object[low.sub.object_origin[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < low.sub.morphism_origin.size(); ++i)
    low.local_morphism[low.sub.morphism_origin[i]] = static_cast<int>(i);
  return low;
}

int MatchingObject::find(const std::vector<int>& family) const {
  auto it = lookup_.find(family);
  return it == lookup_.end() ? kNoIndex : it->second;
}

int MatchingObject::slot(MorphismIndex f) const {
  auto it = std::lower_bound(index.begin(), index.end(), f);
  return it != index.end() && *it == f ? static_cast<int>(it - index.begin()) : kNoIndex;
}

int LatchingObject::slot(MorphismIndex f) const {
  auto it = std::lower_bound(index.begin(), index.end(), f);
  return it != index.end() && *it == f ? static_cast<int>(it - index.begin()) : kNoIndex;
}

int LatchingObject::class_of(MorphismIndex f, int a) const { return classes.class_of[offset_[slot(f)] + a]; }

MatchingObject matching_from_lower(const DegreedCategory& D, ObjectIndex x, const LowerPart& low,
                                   const SetDiagram& X_low, SearchBudget& budget) {
  const FinCategory& C = D.cat();
  const FinCategory& L = *low.sub.cat;
  MatchingObject M;
  M.x = x;
  M.cone.codomain = 0;
  // Slots grouped by local target object, in canonical order.
  std::vector<std::vector<int>> slots_at(L.object_count());
  for (ObjectIndex z = 0; z < C.object_count(); ++z) {
    if (low.local_object[z] == kNoIndex) continue;
    for (MorphismIndex f : C.hom(x, z)) {
      slots_at[low.local_object[z]].push_back(static_cast<int>(M.index.size()));
      M.index.push_back(f);
    }
  }
  std::vector<std::vector<std::string>> names(L.object_count());
  for (ObjectIndex z = 0; z < L.object_count(); ++z)
    for (int s : slots_at[z]) names[z].push_back(C.morphism_id(M.index[s]));
  std::vector<std::vector<int>> maps(L.morphism_count());
  for (MorphismIndex k : L.morphisms()) {
    const MorphismIndex kc = low.sub.morphism_origin[k];
    for (int s : slots_at[L.src(k)]) {
      const MorphismIndex image = C.compose(kc, M.index[s]);
      const auto& targets = slots_at[L.tgt(k)];
      auto it = std::find_if(targets.begin(), targets.end(), [&](int t) { return M.index[t] == image; });
      maps[k].push_back(static_cast<int>(it - targets.begin()));
    }
  }
  const SetDiagram W(low.sub.cat, std::move(names), std::move(maps));
  NaturalSearchOptions opts;
  opts.budget = &budget;
  search_natural_maps(W, X_low, opts, [&](const Components& c) {
    std::vector<int> family(M.index.size());
    for (ObjectIndex z = 0; z < L.object_count(); ++z)
      for (std::size_t j = 0; j < slots_at[z].size(); ++j) family[slots_at[z][j]] = c[z][j];
    M.lookup_.emplace(family, M.size());
    M.families.push_back(std::move(family));
    return true;
  });
  return M;
}

LatchingObject latching_from_lower(const DegreedCategory& D, ObjectIndex x, const LowerPart& low,
                                   const SetDiagram& X_low) {
  const FinCategory& C = D.cat();
  LatchingObject L;
  L.x = x;
  for (ObjectIndex z = 0; z < C.object_count(); ++z)
    if (low.local_object[z] != kNoIndex)
      for (MorphismIndex f : C.hom(z, x)) L.index.push_back(f);
  std::sort(L.index.begin(), L.index.end());
  for (std::size_t s = 0; s < L.index.size(); ++s) {
    L.offset_.push_back(static_cast<int>(L.pairs.size()));
    const int n = X_low.size(low.local_object[C.src(L.index[s])]);
    for (int a = 0; a < n; ++a) L.pairs.emplace_back(static_cast<int>(s), a);
  }
  std::vector<std::pair<int, int>> identify;
  for (std::size_t s = 0; s < L.index.size(); ++s) {
    const MorphismIndex f = L.index[s];
    const ObjectIndex z = C.src(f);
    for (ObjectIndex z2 = 0; z2 < C.object_count(); ++z2) {
      if (low.local_object[z2] == kNoIndex) continue;
      for (MorphismIndex k : C.hom(z2, z)) {
        const MorphismIndex kl = low.local_morphism[k];
        const int s2 = L.slot(C.compose(f, k));
        for (int a = 0; a < X_low.size(low.local_object[z2]); ++a)
          identify.emplace_back(L.offset_[s2] + a, L.offset_[s] + X_low.apply(kl, a));
      }
    }
  }
  L.classes = quotient(static_cast<int>(L.pairs.size()), identify);
  return L;
}

MatchingObject matching_object(const DegreedCategory& D, ObjectIndex x, const SetDiagram& X, long long max_search) {
  const FinCategory& C = D.cat();
  const int delta = D.degree(x);
  const LowerPart low = lower_part(D, delta);
  SearchBudget budget(max_search);
  MatchingObject M = matching_from_lower(D, x, low, restrict(X, low.sub), budget);
  M.cone.codomain = M.size();
  for (int a = 0; a < X.size(x); ++a) {
    std::vector<int> family;
    for (MorphismIndex f : M.index) family.push_back(X.apply(f, a));
    M.cone.image.push_back(M.find(family));
  }

  // The same limit weighted by the boundary hom.
  std::vector<BoundaryHom> boundary;
  std::vector<std::vector<std::string>> names;
  for (ObjectIndex z = 0; z < C.object_count(); ++z) {
    boundary.push_back(boundary_hom(D, x, z, delta));
    names.push_back(numbered("c", boundary.back().class_count()));
  }
  auto pair_class = [&](ObjectIndex z, MorphismIndex p, MorphismIndex q) {
    const auto& bh = boundary[z];
    for (std::size_t i = 0; i < bh.pairs.size(); ++i)
      if (bh.pairs[i].first == p && bh.pairs[i].second == q) return bh.class_of[i];
    fail(ErrorKind::InternalInvariantBroken, "boundary pair not found");
  };
  std::vector<std::vector<int>> maps(C.morphism_count());
  for (MorphismIndex k : C.morphisms()) {
    const auto& bh = boundary[C.src(k)];
    for (int c = 0; c < bh.class_count(); ++c) {
      const Factorization& rep = bh.pairs[bh.representative[c]];
      maps[k].push_back(pair_class(C.tgt(k), rep.first, C.compose(k, rep.second)));
    }
  }
  const SetDiagram W(X.shared_shape(), std::move(names), std::move(maps));
  auto weighted = weighted_limit(W, X, max_search);
  std::vector<Components> converted;
  for (const auto& family : M.families) {
    Components c(C.object_count());
    for (ObjectIndex z = 0; z < C.object_count(); ++z) {
      const auto& bh = boundary[z];
      for (int cl = 0; cl < bh.class_count(); ++cl) {
        const Factorization& rep = bh.pairs[bh.representative[cl]];
        c[z].push_back(X.apply(rep.second, family[M.slot(rep.first)]));
      }
    }
    converted.push_back(std::move(c));
  }
  std::sort(converted.begin(), converted.end());
  std::sort(weighted.begin(), weighted.end());
  if (converted != weighted)
    fail(ErrorKind::InternalInvariantBroken, "conical and weighted matching objects disagree at '" + C.object_id(x) + "'");
  return M;
}

LatchingObject latching_object(const DegreedCategory& D, ObjectIndex x, const SetDiagram& X) {
  const FinCategory& C = D.cat();
  const int delta = D.degree(x);
  const LowerPart low = lower_part(D, delta);
  LatchingObject L = latching_from_lower(D, x, low, restrict(X, low.sub));
  L.cocone.codomain = X.size(x);
  L.cocone.image.assign(L.size(), kNoIndex);
  for (std::size_t i = 0; i < L.pairs.size(); ++i) {
    const auto [s, a] = L.pairs[i];
    const int value = X.apply(L.index[s], a);
    int& slot = L.cocone.image[L.classes.class_of[i]];
    if (slot != kNoIndex && slot != value) fail(ErrorKind::InternalInvariantBroken, "latching cocone is not well defined");
    slot = value;
  }

  // The index coincides with the matching index of the opposite category.
  const DegreedCategory op = opposite(D);
  std::vector<std::string> ours, theirs;
  for (MorphismIndex f : L.index) ours.push_back(C.morphism_id(f));
  for (MorphismIndex f : op.cat().morphisms())
    if (op.cat().src(f) == x && op.tgt_degree(f) < delta) theirs.push_back(op.cat().morphism_id(f));
  std::sort(ours.begin(), ours.end());
  std::sort(theirs.begin(), theirs.end());
  if (ours != theirs) fail(ErrorKind::InternalInvariantBroken, "latching index differs from the opposite matching index");

  // The coend weighted by ∂C(−, x) must be in bijection with the classes.
  std::vector<BoundaryHom> boundary;
  std::vector<std::vector<std::string>> names;
  for (ObjectIndex z = 0; z < C.object_count(); ++z) {
    boundary.push_back(boundary_hom(D, z, x, delta));
    names.push_back(numbered("c", boundary.back().class_count()));
  }
  auto pair_class = [&](ObjectIndex z, MorphismIndex p, MorphismIndex q) {
    const auto& bh = boundary[z];
    for (std::size_t i = 0; i < bh.pairs.size(); ++i)
      if (bh.pairs[i].first == p && bh.pairs[i].second == q) return bh.class_of[i];
    fail(ErrorKind::InternalInvariantBroken, "boundary pair not found");
  };
  const auto op_shape = std::make_shared<const FinCategory>(op.cat());
  const auto from_op = match_by_id(*op_shape, C);
  std::vector<std::vector<int>> maps(op_shape->morphism_count());
  for (MorphismIndex kop : op_shape->morphisms()) {
    const MorphismIndex k = from_op[kop];  // k: a → b in C, acting ∂(b, x) → ∂(a, x)
    const auto& bh = boundary[C.tgt(k)];
    for (int c = 0; c < bh.class_count(); ++c) {
      const Factorization& rep = bh.pairs[bh.representative[c]];
      maps[kop].push_back(pair_class(C.src(k), C.compose(rep.first, k), rep.second));
    }
  }
  const SetDiagram U(op_shape, std::move(names), std::move(maps));
  const Coend coend = weighted_colimit(U, X);
  if (coend.classes.class_count() != L.size())
    fail(ErrorKind::InternalInvariantBroken, "conical and weighted latching objects differ in size at '" + C.object_id(x) + "'");
  std::vector<int> image(L.size(), kNoIndex);
  std::vector<bool> hit(L.size(), false);
  for (std::size_t i = 0; i < L.pairs.size(); ++i) {
    const auto [s, a] = L.pairs[i];
    const MorphismIndex f = L.index[s];
    const ObjectIndex z = C.src(f);
    const CoendElement e{z, pair_class(z, C.identity(z), f), a};
    const auto pos = std::lower_bound(coend.elements.begin(), coend.elements.end(), e) - coend.elements.begin();
    const int target = coend.classes.class_of[pos];
    int& slot = image[L.classes.class_of[i]];
    if (slot != kNoIndex && slot != target) fail(ErrorKind::InternalInvariantBroken, "latching comparison is not well defined");
    slot = target;
  }
  for (int t : image) {
    if (t == kNoIndex || hit[t]) fail(ErrorKind::InternalInvariantBroken, "latching comparison is not a bijection");
    hit[t] = true;
  }
  return L;
}

std::vector<std::vector<int>> graph_limit(const DegreedCategory& D, ObjectIndex x, const SetDiagram& X,
                                          long long max_search) {
  const FinCategory& C = D.cat();
  const DegreeAnalysis A(D);
  std::vector<MorphismIndex> vertices;
  for (MorphismIndex f : C.morphisms())
    if (C.src(f) == x && !C.is_identity(f) && A.down(f)) vertices.push_back(f);
  struct Edge {
    int from, to;
    MorphismIndex k;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      for (MorphismIndex k : C.hom(C.tgt(vertices[i]), C.tgt(vertices[j])))
        if (A.down(k) && C.compose(k, vertices[i]) == vertices[j])
          edges.push_back({static_cast<int>(i), static_cast<int>(j), k});

  SearchBudget budget(max_search);
  std::vector<std::vector<int>> out;
  std::vector<int> family(vertices.size(), kNoIndex);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == vertices.size()) {
      out.push_back(family);
      return;
    }
    for (int v = 0; v < X.size(C.tgt(vertices[i])); ++v) {
      budget.spend();
      family[i] = v;
      bool ok = true;
      for (const Edge& e : edges) {
        const int a = family[e.from], b = family[e.to];
        if (a != kNoIndex && b != kNoIndex && X.apply(e.k, a) != b) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
    family[i] = kNoIndex;
  };
  rec(rec, 0);
  return out;
}

}  // namespace reedy
