#include "reedy/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace reedy {

bool FinFunction::injective() const {
  std::vector<bool> hit(codomain, false);
  for (int b : image) {
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

bool FinFunction::surjective() const {
  std::vector<bool> hit(codomain, false);
  for (int b : image) hit[b] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

FinFunction FinFunction::identity(int n) {
  FinFunction f{n, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) f.image[i] = i;
  return f;
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  FinFunction out{g.codomain, std::vector<int>(f.image.size())};
  for (std::size_t i = 0; i < f.image.size(); ++i) out.image[i] = g.image[f.image[i]];
  return out;
}

SetDiagram::SetDiagram(std::shared_ptr<const FinCategory> shape, std::vector<std::vector<std::string>> sets,
                       std::vector<std::vector<int>> maps)
    : shape_(std::move(shape)), sets_(std::move(sets)), maps_(std::move(maps)) {
  const FinCategory& C = *shape_;
  if (static_cast<int>(sets_.size()) != C.object_count() || static_cast<int>(maps_.size()) != C.morphism_count())
    fail(ErrorKind::NotAFunctor, "diagram does not assign a set to every object and a map to every morphism");
  for (MorphismIndex f : C.morphisms()) {
    const auto& m = maps_[f];
    if (static_cast<int>(m.size()) != size(C.src(f)))
      fail(ErrorKind::NotAFunctor, "map of '" + C.morphism_id(f) + "' has the wrong domain");
    for (int b : m)
      if (b < 0 || b >= size(C.tgt(f)))
        fail(ErrorKind::NotAFunctor, "map of '" + C.morphism_id(f) + "' leaves its codomain");
  }
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    const auto& m = maps_[C.identity(x)];
    for (int a = 0; a < size(x); ++a)
      if (m[a] != a) fail(ErrorKind::NotAFunctor, "identity of '" + C.object_id(x) + "' is not sent to the identity");
  }
  for (MorphismIndex g : C.morphisms())
    for (MorphismIndex f : C.morphisms()) {
      if (!C.composable(g, f)) continue;
      const auto& gf = maps_[C.compose(g, f)];
      for (int a = 0; a < size(C.src(f)); ++a)
        if (gf[a] != maps_[g][maps_[f][a]])
          fail(ErrorKind::NotAFunctor,
               "composition (" + C.morphism_id(g) + ", " + C.morphism_id(f) + ") is not preserved");
    }
}

FinFunction SetDiagram::function(MorphismIndex f) const { return FinFunction{size(shape_->tgt(f)), maps_[f]}; }

int SetDiagram::find_element(ObjectIndex x, std::string_view name) const {
  const auto& s = sets_[x];
  auto it = std::find(s.begin(), s.end(), name);
  return it == s.end() ? kNoIndex : static_cast<int>(it - s.begin());
}

DiagramMap::DiagramMap(SetDiagram source, SetDiagram target, std::vector<std::vector<int>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const FinCategory& C = source_.shape();
  if (!(C == target_.shape())) fail(ErrorKind::NotNatural, "source and target have different shapes");
  if (static_cast<int>(components_.size()) != C.object_count())
    fail(ErrorKind::NotNatural, "a component is missing");
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    if (static_cast<int>(components_[x].size()) != source_.size(x))
      fail(ErrorKind::NotNatural, "component at '" + C.object_id(x) + "' has the wrong domain");
    for (int b : components_[x])
      if (b < 0 || b >= target_.size(x))
        fail(ErrorKind::NotNatural, "component at '" + C.object_id(x) + "' leaves its codomain");
  }
  for (MorphismIndex f : C.morphisms()) {
    const ObjectIndex x = C.src(f), y = C.tgt(f);
    for (int a = 0; a < source_.size(x); ++a)
      if (components_[y][source_.apply(f, a)] != target_.apply(f, components_[x][a]))
        fail(ErrorKind::NotNatural, "naturality fails at '" + C.morphism_id(f) + "'");
  }
}

FinFunction DiagramMap::function(ObjectIndex x) const { return FinFunction{target_.size(x), components_[x]}; }

DiagramMap identity_map(const SetDiagram& X) {
  std::vector<std::vector<int>> comps(X.shape().object_count());
  for (ObjectIndex x = 0; x < X.shape().object_count(); ++x) comps[x] = FinFunction::identity(X.size(x)).image;
  return DiagramMap(X, X, std::move(comps));
}

DiagramMap compose(const DiagramMap& g, const DiagramMap& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::NotNatural, "maps are not composable");
  std::vector<std::vector<int>> comps(f.shape().object_count());
  for (ObjectIndex x = 0; x < f.shape().object_count(); ++x) comps[x] = compose(g.function(x), f.function(x)).image;
  return DiagramMap(f.source(), g.target(), std::move(comps));
}

SetDiagram constant_diagram(std::shared_ptr<const FinCategory> shape, int size) {
  std::vector<std::vector<std::string>> sets(shape->object_count());
  for (auto& s : sets)
    for (int i = 0; i < size; ++i) s.push_back(std::to_string(i));
  std::vector<std::vector<int>> maps(shape->morphism_count(), FinFunction::identity(size).image);
  return SetDiagram(std::move(shape), std::move(sets), std::move(maps));
}

SetDiagram representable(std::shared_ptr<const FinCategory> Cp, ObjectIndex c) {
  const FinCategory& C = *Cp;
  std::vector<std::vector<std::string>> sets(C.object_count());
  for (ObjectIndex y = 0; y < C.object_count(); ++y)
    for (MorphismIndex f : C.hom(c, y)) sets[y].push_back(C.morphism_id(f));
  std::vector<std::vector<int>> maps(C.morphism_count());
  for (MorphismIndex k : C.morphisms()) {
    const auto source = C.hom(c, C.src(k));
    const auto target = C.hom(c, C.tgt(k));
    for (MorphismIndex f : source) maps[k].push_back(C.compose(k, f) - target.front());
  }
  return SetDiagram(std::move(Cp), std::move(sets), std::move(maps));
}

SetDiagram corepresentable(const FinCategory& C, std::shared_ptr<const FinCategory> op, ObjectIndex c) {
  const FinCategory& O = *op;
  std::vector<std::vector<std::string>> sets(O.object_count());
  for (ObjectIndex y = 0; y < O.object_count(); ++y) {
    const ObjectIndex cy = C.object_index(O.object_id(y));
    for (MorphismIndex f : C.hom(cy, c)) sets[y].push_back(C.morphism_id(f));
  }
  std::vector<std::vector<int>> maps(O.morphism_count());
  for (MorphismIndex ko : O.morphisms()) {
    // ko: y′ → y in the opposite is k: y → y′ in C, acting by precomposition.
    const MorphismIndex k = C.morphism_index(O.morphism_id(ko));
    const auto source = C.hom(C.tgt(k), c);
    const auto target = C.hom(C.src(k), c);
    for (MorphismIndex f : source) maps[ko].push_back(C.compose(f, k) - target.front());
  }
  return SetDiagram(std::move(op), std::move(sets), std::move(maps));
}

SetDiagram restrict(const SetDiagram& X, const Subcategory& sub) {
  std::vector<std::vector<std::string>> sets;
  for (ObjectIndex x : sub.object_origin) sets.push_back(X.elements(x));
  std::vector<std::vector<int>> maps;
  for (MorphismIndex f : sub.morphism_origin) maps.push_back(X.map(f));
  return SetDiagram(sub.cat, std::move(sets), std::move(maps));
}

}  // namespace reedy

namespace reedy {

namespace {

class NaturalSearch {
 public:
  NaturalSearch(const SetDiagram& A, const SetDiagram& B, const NaturalSearchOptions& options,
                const std::function<bool(const Components&)>& visit)
      : A_(A), B_(B), C_(A.shape()), options_(options), visit_(visit) {
    for (ObjectIndex x = 0; x < C_.object_count(); ++x)
      for (int a = 0; a < A_.size(x); ++a) order_.emplace_back(x, a);
  }

  void run() {
    if (!prune()) return;
    Components values(C_.object_count());
    for (ObjectIndex x = 0; x < C_.object_count(); ++x) values[x].assign(A_.size(x), kNoIndex);
    search(values, 0);
  }

 private:
  // Arc consistency: v stays a candidate for (x, a) only while every
  // B(f)(v) is still a candidate for A(f)(a). False if some domain empties.
  bool prune() {
    domain_.resize(C_.object_count());
    for (ObjectIndex x = 0; x < C_.object_count(); ++x)
      domain_[x].assign(A_.size(x), std::vector<char>(B_.size(x), 1));
    for (bool changed = true; changed;) {
      changed = false;
      for (ObjectIndex x = 0; x < C_.object_count(); ++x)
        for (int a = 0; a < A_.size(x); ++a) {
          bool any = false;
          for (int v = 0; v < B_.size(x); ++v) {
            if (!domain_[x][a][v]) continue;
            bool ok = true;
            for (ObjectIndex z = 0; z < C_.object_count() && ok; ++z)
              for (MorphismIndex f : C_.hom(x, z))
                if (!C_.is_identity(f) && !domain_[z][A_.apply(f, a)][B_.apply(f, v)]) {
                  ok = false;
                  break;
                }
            if (ok) {
              any = true;
            } else {
              domain_[x][a][v] = 0;
              changed = true;
            }
          }
          if (!any) return false;
        }
    }
    return true;
  }

  // Assigns (x, a) = v and everything it forces; false on a conflict.
  bool assign(Components& values, ObjectIndex x, int a, int v) const {
    std::vector<std::pair<ObjectIndex, int>> queue{{x, a}};
    values[x][a] = v;
    while (!queue.empty()) {
      const auto [y, b] = queue.back();
      queue.pop_back();
      const int w = values[y][b];
      for (ObjectIndex z = 0; z < C_.object_count(); ++z)
        for (MorphismIndex f : C_.hom(y, z)) {
          if (C_.is_identity(f)) continue;
          const int b2 = A_.apply(f, b);
          const int w2 = B_.apply(f, w);
          int& slot = values[z][b2];
          if (slot == kNoIndex) {
            if (options_.allowed && !options_.allowed(z, b2, w2)) return false;
            slot = w2;
            queue.emplace_back(z, b2);
          } else if (slot != w2) {
            return false;
          }
        }
    }
    return true;
  }

  bool search(Components& values, std::size_t pos) {
    while (pos < order_.size() && values[order_[pos].first][order_[pos].second] != kNoIndex) ++pos;
    if (pos == order_.size()) return visit_(values);
    const auto [x, a] = order_[pos];
    std::vector<int> candidates(B_.size(x));
    std::iota(candidates.begin(), candidates.end(), 0);
    if (options_.shuffle) std::shuffle(candidates.begin(), candidates.end(), *options_.shuffle);
    for (int v : candidates) {
      if (options_.budget) options_.budget->spend();
      if (!domain_[x][a][v] || (options_.allowed && !options_.allowed(x, a, v))) continue;
      Components next = values;
      if (assign(next, x, a, v) && !search(next, pos + 1)) return false;
    }
    return true;
  }

  const SetDiagram& A_;
  const SetDiagram& B_;
  const FinCategory& C_;
  const NaturalSearchOptions& options_;
  const std::function<bool(const Components&)>& visit_;
  std::vector<std::pair<ObjectIndex, int>> order_;
  std::vector<std::vector<std::vector<char>>> domain_;
};

}  // namespace

void search_natural_maps(const SetDiagram& A, const SetDiagram& B, const NaturalSearchOptions& options,
                         const std::function<bool(const Components&)>& visit) {
  if (A.shared_shape() != B.shared_shape() && !(A.shape() == B.shape()))
    fail(ErrorKind::NotNatural, "diagrams have different shapes");
  NaturalSearch(A, B, options, visit).run();
}

}  // namespace reedy
