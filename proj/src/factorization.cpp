#include "reedy/factorization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "reedy/classify.hpp"

namespace reedy {

FactorizationComponents::FactorizationComponents(FactorizationGraph graph) : graph_(std::move(graph)) {
  const int n = static_cast<int>(graph_.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adjacent(n);  // (neighbour, edge)
  for (int e = 0; e < static_cast<int>(graph_.edges.size()); ++e) {
    const auto& edge = graph_.edges[e];
    adjacent[edge.from].emplace_back(edge.to, e);
    adjacent[edge.to].emplace_back(edge.from, e);
  }
  component_.assign(n, -1);
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  depth_.assign(n, 0);
  for (int root = 0; root < n; ++root) {
    if (component_[root] != -1) continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    std::deque<int> queue{root};
    component_[root] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      components_[id].push_back(v);
      for (auto [w, e] : adjacent[v]) {
        if (component_[w] != -1) continue;
        component_[w] = id;
        parent_[w] = v;
        parent_edge_[w] = e;
        depth_[w] = depth_[v] + 1;
        queue.push_back(w);
      }
    }
    std::sort(components_[id].begin(), components_[id].end());
  }
}

std::optional<std::vector<ZigzagStep>> FactorizationComponents::path(int a, int b) const {
  if (component_[a] != component_[b]) return std::nullopt;
  std::vector<ZigzagStep> from_a;
  std::vector<ZigzagStep> from_b;
  auto step_up = [&](int& v, std::vector<ZigzagStep>& out) {
    const int e = parent_edge_[v];
    out.push_back({e, graph_.edges[e].from == v});
    v = parent_[v];
  };
  while (depth_[a] > depth_[b]) step_up(a, from_a);
  while (depth_[b] > depth_[a]) step_up(b, from_b);
  while (a != b) {
    step_up(a, from_a);
    step_up(b, from_b);
  }
  for (auto it = from_b.rbegin(); it != from_b.rend(); ++it) from_a.push_back({it->edge, !it->forward});
  return from_a;
}

std::vector<Factorization> all_factorizations(const FinCategory& C, MorphismIndex f) {
  std::vector<Factorization> out;
  const ObjectIndex x = C.src(f), y = C.tgt(f);
  for (ObjectIndex z = 0; z < C.object_count(); ++z)
    for (MorphismIndex g : C.hom(x, z))
      for (MorphismIndex h : C.hom(z, y))
        if (C.compose(h, g) == f) out.push_back({g, h, z});
  return out;
}

std::vector<Factorization> fundamental_factorizations(const DegreedCategory& C, MorphismIndex f) {
  if (f < 0 || f >= C.cat().morphism_count()) fail(ErrorKind::UnknownMorphism, "morphism index out of range");
  const int bound = std::min(C.src_degree(f), C.tgt_degree(f));
  std::vector<Factorization> out;
  for (const auto& fac : all_factorizations(C.cat(), f))
    if (C.degree(fac.mid) < bound) out.push_back(fac);
  return out;
}

bool is_basic(const DegreedCategory& C, MorphismIndex f) { return fundamental_factorizations(C, f).empty(); }

FactorizationGraph factorization_graph(const FinCategory& C, MorphismIndex f, std::vector<Factorization> vertices,
                                       const std::vector<bool>* connector_filter) {
  FactorizationGraph g{f, std::move(vertices), {}};
  const int n = static_cast<int>(g.vertices.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const auto& a = g.vertices[u];
      const auto& b = g.vertices[v];
      for (MorphismIndex k : C.hom(a.mid, b.mid)) {
        if (connector_filter && !(*connector_filter)[k]) continue;
        if (C.compose(k, a.first) == b.first && C.compose(b.second, k) == a.second) g.edges.push_back({u, v, k});
      }
    }
  return g;
}

FactorizationComponents factorization_components(const DegreedCategory& C, MorphismIndex f, int bound) {
  if (f < 0 || f >= C.cat().morphism_count()) fail(ErrorKind::UnknownMorphism, "morphism index out of range");
  std::vector<Factorization> vertices;
  for (const auto& fac : all_factorizations(C.cat(), f))
    if (C.degree(fac.mid) < bound) vertices.push_back(fac);
  return FactorizationComponents(factorization_graph(C.cat(), f, std::move(vertices)));
}

std::optional<std::vector<Factorization>> zigzag_within(const DegreedCategory& C, MorphismIndex f,
                                                        const Factorization& a, const Factorization& b, int bound) {
  std::vector<Factorization> vertices;
  for (const auto& fac : all_factorizations(C.cat(), f))
    if (C.degree(fac.mid) < bound || fac == a || fac == b) vertices.push_back(fac);
  auto index_of = [&](const Factorization& x) {
    return static_cast<int>(std::find(vertices.begin(), vertices.end(), x) - vertices.begin());
  };
  const int ia = index_of(a), ib = index_of(b);
  if (ia == static_cast<int>(vertices.size()) || ib == static_cast<int>(vertices.size())) return std::nullopt;
  FactorizationComponents comps(factorization_graph(C.cat(), f, vertices));
  auto steps = comps.path(ia, ib);
  if (!steps) return std::nullopt;
  std::vector<Factorization> out{vertices[ia]};
  int at = ia;
  for (const auto& s : *steps) {
    const auto& e = comps.graph().edges[s.edge];
    at = (e.from == at) ? e.to : e.from;
    out.push_back(vertices[at]);
  }
  return out;
}

int BoundaryHom::classes_over(MorphismIndex f) const {
  return static_cast<int>(std::count(to_hom.begin(), to_hom.end(), f));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  // Keeps the smaller index as the root so representatives are least elements.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

BoundaryHom boundary_hom(const DegreedCategory& D, ObjectIndex x, ObjectIndex y, int delta) {
  const FinCategory& C = D.cat();
  BoundaryHom out{x, y, delta, {}, {}, {}, {}};
  const int m = C.morphism_count();
  std::vector<int> index(static_cast<std::size_t>(m) * m, -1);
  for (ObjectIndex z = 0; z < C.object_count(); ++z) {
    if (D.degree(z) >= delta) continue;
    for (MorphismIndex g : C.hom(x, z))
      for (MorphismIndex h : C.hom(z, y)) {
        index[static_cast<std::size_t>(g) * m + h] = static_cast<int>(out.pairs.size());
        out.pairs.push_back({g, h, z});
      }
  }
  UnionFind uf(static_cast<int>(out.pairs.size()));
  // (p, q′∘k) ∼ (k∘p, q′) for p: x → z, k: z → z′, q′: z′ → y.
  for (const auto& pair : out.pairs) {
    const MorphismIndex p = pair.first;
    const ObjectIndex z = pair.mid;
    for (ObjectIndex z2 = 0; z2 < C.object_count(); ++z2) {
      if (D.degree(z2) >= delta) continue;
      for (MorphismIndex k : C.hom(z, z2))
        for (MorphismIndex q2 : C.hom(z2, y)) {
          const int lhs = index[static_cast<std::size_t>(p) * m + C.compose(q2, k)];
          const int rhs = index[static_cast<std::size_t>(C.compose(k, p)) * m + q2];
          uf.unite(lhs, rhs);
        }
    }
  }
  std::vector<int> class_of_root(out.pairs.size(), -1);
  out.class_of.resize(out.pairs.size());
  for (int i = 0; i < static_cast<int>(out.pairs.size()); ++i) {
    const int r = uf.find(i);
    if (class_of_root[r] == -1) {
      class_of_root[r] = static_cast<int>(out.representative.size());
      out.representative.push_back(r);
      out.to_hom.push_back(C.compose(out.pairs[r].second, out.pairs[r].first));
    }
    out.class_of[i] = class_of_root[r];
  }
  return out;
}

DegreeAnalysis::DegreeAnalysis(DegreedCategory C) : C_(std::move(C)) {
  const FinCategory& cat = C_.cat();
  const int m = cat.morphism_count();
  all_.assign(m, {});
  fundamental_.assign(m, {});
  for (MorphismIndex g : cat.morphisms()) {
    const ObjectIndex z = cat.tgt(g);
    for (ObjectIndex y = 0; y < cat.object_count(); ++y)
      for (MorphismIndex h : cat.hom(z, y)) all_[cat.compose(h, g)].push_back({g, h, z});
  }
  for (MorphismIndex f : cat.morphisms()) {
    const int bound = std::min(C_.src_degree(f), C_.tgt_degree(f));
    for (const auto& fac : all_[f])
      if (C_.degree(fac.mid) < bound) fundamental_[f].push_back(fac);
  }
}

MorphismClasses DegreeAnalysis::classes() const {
  const int m = cat().morphism_count();
  MorphismClasses out{std::vector<bool>(m), std::vector<bool>(m), std::vector<bool>(m)};
  for (MorphismIndex f = 0; f < m; ++f) {
    out.up[f] = up(f);
    out.down[f] = down(f);
    out.level[f] = basic_level(f);
  }
  return out;
}

MorphismClasses basic_classes(const DegreedCategory& C) { return DegreeAnalysis(C).classes(); }

ReedyFactorizer::ReedyFactorizer(const DegreedCategory& C, FactorMode mode)
    : analysis_(std::make_shared<const DegreeAnalysis>(C)), mode_(mode) {
  const auto check = mode == FactorMode::Strict ? check_almost_reedy(*analysis_) : check_almost_c_reedy(*analysis_);
  if (!check.holds)
    fail(ErrorKind::NotAlmostReedy, mode == FactorMode::Strict ? "the category is not almost-Reedy"
                                                                : "the category is not almost c-Reedy");
}

ReedyFactorizer::ReedyFactorizer(std::shared_ptr<const DegreeAnalysis> analysis, FactorMode mode)
    : analysis_(std::move(analysis)), mode_(mode) {}

Factorization ReedyFactorizer::factor(MorphismIndex f) const {
  if (f < 0 || f >= analysis_->cat().morphism_count()) fail(ErrorKind::UnknownMorphism, "morphism index out of range");
  int steps = 0;
  return factor_with_guard(f, steps);
}

Factorization ReedyFactorizer::factor_with_guard(MorphismIndex f, int& steps) const {
  constexpr int kStepGuard = 1'000'000;
  const DegreeAnalysis& A = *analysis_;
  const FinCategory& C = A.cat();
  if (A.basic(f)) {
    if (A.lowers(f)) return {f, C.identity(C.tgt(f)), C.tgt(f)};
    return {C.identity(C.src(f)), f, C.src(f)};
  }
  auto settled = [&](MorphismIndex k) {
    return mode_ == FactorMode::Strict ? C.is_identity(k) : A.basic_level(k);
  };
  const Factorization start = A.fundamental(f).front();
  MorphismIndex g = start.first;
  MorphismIndex h = start.second;
  while (true) {
    if (++steps > kStepGuard) fail(ErrorKind::InternalInvariantBroken, "factorization iteration did not terminate");
    const Factorization fg = factor_with_guard(g, steps);
    const Factorization fh = factor_with_guard(h, steps);
    const MorphismIndex up_g = fg.second;
    const MorphismIndex down_h = fh.first;
    if (settled(up_g) && settled(down_h)) {
      const MorphismIndex down = C.compose(down_h, C.compose(up_g, fg.first));
      return {down, fh.second, C.tgt(down)};
    }
    if (!settled(up_g)) {
      g = fg.first;
      h = C.compose(h, up_g);
    } else {
      g = C.compose(down_h, g);
      h = fh.second;
    }
  }
}

Factorization reedy_factor(const DegreedCategory& C, MorphismIndex f, FactorMode mode) {
  return ReedyFactorizer(C, mode).factor(f);
}

}  // namespace reedy
