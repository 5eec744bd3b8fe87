#include "reedy/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>

namespace reedy {

namespace {

using S = StructureClass;

// Verdicts in the order of kAllStructureClasses.
std::vector<std::pair<StructureClass, bool>> verdicts(std::initializer_list<bool> values) {
  std::vector<std::pair<StructureClass, bool>> out;
  auto it = values.begin();
  for (StructureClass c : kAllStructureClasses) out.emplace_back(c, *it++);
  return out;
}

constexpr bool T = true;
constexpr bool F = false;

CorpusEntry terminal() {
  return {"terminal", CategoryBuilder().object("*", 0).build(), verdicts({T, T, T, T, T, T, T, T, T, T, T, T}),
          "one object and its identity"};
}

CorpusEntry discrete_2() {
  return {"discrete_2", CategoryBuilder().object("x", 0).object("y", 0).build(),
          verdicts({T, T, T, T, T, T, T, T, T, T, T, T}), "two objects, identities only"};
}

CorpusEntry arrow() {
  return {"arrow", CategoryBuilder().object("0", 0).object("1", 1).arrow("a", "0", "1").build(),
          verdicts({F, T, F, T, T, T, T, T, T, T, T, T}), "the walking arrow, degree increasing along it"};
}

CorpusEntry parallel_pair() {
  return {"parallel_pair",
          CategoryBuilder().object("x", 1).object("y", 0).arrow("f", "x", "y").arrow("g", "x", "y").build(),
          verdicts({T, F, T, T, T, T, T, T, T, T, T, T}), "two parallel arrows from degree 1 to degree 0"};
}

CorpusEntry z2_group() {
  return {"z2_group", CategoryBuilder().object("*", 0).arrow("t", "*", "*").composite("t", "t", "id_*").build(),
          verdicts({F, F, T, T, F, T, F, F, T, T, T, T}), "the cyclic group of order 2 as a one-object category"};
}

CorpusEntry idempotent() {
  return {"idempotent", CategoryBuilder().object("*", 0).arrow("e", "*", "*").composite("e", "e", "e").build(),
          verdicts({F, F, T, T, F, F, F, F, F, F, T, T}),
          "the monoid {1, e} with e idempotent; its only stratum is not a groupoid"};
}

// Objects a, b, c, d with a→b→d and a→c→d commuting.
DegreedCategory square(int a, int b, int c, int d) {
  return CategoryBuilder()
      .object("a", a)
      .object("b", b)
      .object("c", c)
      .object("d", d)
      .arrow("ab", "a", "b")
      .arrow("bd", "b", "d")
      .arrow("ac", "a", "c")
      .arrow("cd", "c", "d")
      .arrow("ad", "a", "d")
      .composite("bd", "ab", "ad")
      .composite("cd", "ac", "ad")
      .build();
}

CorpusEntry almost_reedy_square() {
  return {"almost_reedy_square", square(3, 2, 0, 1), verdicts({F, F, F, T, T, T, T, F, T, F, T, F}),
          "commuting square whose only non-basic arrow is the composite a→d; almost-Reedy but not Reedy"};
}

CorpusEntry c_reedy_square() {
  return {"c_reedy_square", square(1, 1, 0, 2), verdicts({F, F, F, T, F, F, F, F, F, F, T, F}),
          "commuting square with a level arrow a→b; almost c-Reedy with two unrelated Reedy factorizations of a→d"};
}

CorpusEntry iso_pair() {
  return {"iso_pair",
          CategoryBuilder()
              .object("0", 0)
              .object("1", 1)
              .arrow("f", "0", "1")
              .arrow("g", "1", "0")
              .composite("g", "f", "id_0")
              .composite("f", "g", "id_1")
              .build(),
          verdicts({F, F, F, F, F, F, F, F, F, F, F, F}),
          "two objects joined by a single nonidentity isomorphism; not bistratified"};
}

CorpusEntry rezk_poset() {
  return {"rezk_poset",
          CategoryBuilder()
              .object("0", 0)
              .object("1", 1)
              .object("2", 2)
              .arrow("r10", "1", "0")
              .arrow("r02", "0", "2")
              .arrow("r12", "1", "2")
              .composite("r02", "r10", "r12")
              .build(),
          verdicts({F, F, F, T, T, T, T, T, T, T, T, T}),
          "the poset 1 ≤ 0 ≤ 2 with degrees 1, 0, 2; Reedy with its canonical classes"};
}

CorpusEntry delta(int n) {
  return {"delta_le_" + std::to_string(n), truncated_simplex(n), verdicts({F, F, F, T, T, T, T, T, T, T, T, T}),
          "truncated simplex category, degree = dimension"};
}

// The orbit category of the group of order 2: G/e carries the swap t, and
// p: G/e → G/G is the projection with p∘t = p.
CorpusEntry orbit_z2(std::string name, int deg_e, int deg_g, std::vector<std::pair<StructureClass, bool>> expected,
                     std::string provenance) {
  return {std::move(name),
          CategoryBuilder()
              .object("G/e", deg_e, "id_e")
              .object("G/G", deg_g, "id_G")
              .arrow("t", "G/e", "G/e")
              .arrow("p", "G/e", "G/G")
              .composite("t", "t", "id_e")
              .composite("p", "t", "p")
              .build(),
          std::move(expected), std::move(provenance)};
}

CorpusEntry orbit_z2_op_deg_h() {
  return {"orbit_Z2_op_degH",
          CategoryBuilder()
              .object("G/e", 1, "id_e")
              .object("G/G", 2, "id_G")
              .arrow("t", "G/e", "G/e")
              .arrow("q", "G/G", "G/e")
              .composite("t", "t", "id_e")
              .composite("t", "q", "q")
              .build(),
          verdicts({F, F, T, T, F, T, F, F, F, F, F, F}),
          "opposite orbit category with deg(G/H) = |H|; the swap fixes the lowering arrow, so freeness fails"};
}

using Factory = CorpusEntry (*)();

const std::vector<std::pair<std::string_view, Factory>>& registry() {
  static const std::vector<std::pair<std::string_view, Factory>> r = {
      {"almost_reedy_square", almost_reedy_square},
      {"arrow", arrow},
      {"c_reedy_square", c_reedy_square},
      {"delta_le_1", [] { return delta(1); }},
      {"delta_le_2", [] { return delta(2); }},
      {"discrete_2", discrete_2},
      {"idempotent", idempotent},
      {"iso_pair", iso_pair},
      {"orbit_Z2_degH",
       [] {
         return orbit_z2("orbit_Z2_degH", 1, 2, verdicts({F, F, F, T, F, T, F, F, T, T, T, T}),
                         "orbit category of the group of order 2 with deg(G/H) = |H|; g-Reedy with every arrow raising");
       }},
      {"orbit_Z2_degIndex",
       [] {
         return orbit_z2("orbit_Z2_degIndex", 2, 1, verdicts({F, F, T, T, F, T, F, F, T, T, T, T}),
                         "orbit category of the group of order 2 with deg(G/H) = [G:H]");
       }},
      {"orbit_Z2_op_degH", orbit_z2_op_deg_h},
      {"parallel_pair", parallel_pair},
      {"rezk_poset", rezk_poset},
      {"terminal", terminal},
      {"z2_group", z2_group},
  };
  return r;
}

// ---- enumeration ------------------------------------------------------------

// Labelled composition tables with a fixed hom-size matrix. Morphisms are
// numbered identities first, then the others by (src, tgt, j).
class TableSearch {
 public:
  TableSearch(int n, std::vector<int> sizes, bool up_to_iso, const std::function<void(const FinCategory&)>& visit)
      : n_(n), sizes_(std::move(sizes)), visit_(visit) {
    for (int x = 0; x < n_; ++x) {
      src_.push_back(x);
      tgt_.push_back(x);
      local_.push_back(-1);
    }
    first_.assign(n_ * n_, 0);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        first_[x * n_ + y] = static_cast<int>(src_.size());
        for (int j = 0; j < sizes_[x * n_ + y]; ++j) {
          src_.push_back(x);
          tgt_.push_back(y);
          local_.push_back(j);
        }
      }
    m_ = static_cast<int>(src_.size());
    table_.assign(m_ * m_, kNoIndex);
    for (int f = 0; f < m_; ++f) {
      table_[tgt_[f] * m_ + f] = f;
      table_[f * m_ + src_[f]] = f;
    }
    for (int g = n_; g < m_; ++g)
      for (int f = n_; f < m_; ++f)
        if (tgt_[f] == src_[g]) cells_.emplace_back(g, f);
    if (up_to_iso) build_group();
  }

  void run() { fill(0); }

 private:
  int comp(int g, int f) const { return table_[g * m_ + f]; }

  std::vector<int> candidates(int x, int y) const {
    std::vector<int> out;
    if (x == y) out.push_back(x);
    for (int j = 0; j < sizes_[x * n_ + y]; ++j) out.push_back(first_[x * n_ + y] + j);
    return out;
  }

  bool associative() const {
    for (int a = n_; a < m_; ++a)
      for (int b = n_; b < m_; ++b) {
        if (tgt_[a] != src_[b]) continue;
        const int ba = comp(b, a);
        if (ba == kNoIndex) continue;
        for (int c = n_; c < m_; ++c) {
          if (tgt_[b] != src_[c]) continue;
          const int cb = comp(c, b);
          if (cb == kNoIndex) continue;
          const int l = comp(c, ba);
          const int r = comp(cb, a);
          if (l != kNoIndex && r != kNoIndex && l != r) return false;
        }
      }
    return true;
  }

  // Relabellings fixing the size matrix: an object permutation together with
  // a permutation inside every hom-set.
  void build_group() {
    std::vector<int> sigma(n_);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool fixes = true;
      for (int x = 0; x < n_ && fixes; ++x)
        for (int y = 0; y < n_ && fixes; ++y) fixes = sizes_[sigma[x] * n_ + sigma[y]] == sizes_[x * n_ + y];
      if (!fixes) continue;
      std::vector<std::vector<int>> taus(n_ * n_);
      for (int c = 0; c < n_ * n_; ++c) {
        taus[c].resize(sizes_[c]);
        std::iota(taus[c].begin(), taus[c].end(), 0);
      }
      // Odometer over the per-cell permutations.
      while (true) {
        std::vector<int> pi(m_);
        for (int f = 0; f < m_; ++f) {
          if (f < n_) {
            pi[f] = sigma[f];
          } else {
            const int c = src_[f] * n_ + tgt_[f];
            pi[f] = first_[sigma[src_[f]] * n_ + sigma[tgt_[f]]] + taus[c][local_[f]];
          }
        }
        bool identity = true;
        for (int f = 0; f < m_; ++f) identity = identity && pi[f] == f;
        if (!identity) {
          std::vector<int> inv(m_);
          for (int f = 0; f < m_; ++f) inv[pi[f]] = f;
          group_.push_back({std::move(pi), std::move(inv)});
        }
        int c = 0;
        while (c < n_ * n_ && !std::next_permutation(taus[c].begin(), taus[c].end())) ++c;
        if (c == n_ * n_) break;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  // False if some relabelling provably maps every completion of the first
  // `filled` cells to a lexicographically smaller table.
  bool canonical_prefix(std::size_t filled) const {
    for (const auto& [pi, inv] : group_) {
      for (std::size_t p = 0; p < cells_.size(); ++p) {
        if (p >= filled) break;
        const auto [g, f] = cells_[p];
        const int pre = comp(inv[g], inv[f]);
        const int mine = comp(g, f);
        if (pre == kNoIndex) break;
        const int image = pi[pre];
        if (image < mine) return false;
        if (image > mine) break;
      }
    }
    return true;
  }

  void fill(std::size_t i) {
    if (i == cells_.size()) {
      emit();
      return;
    }
    const auto [g, f] = cells_[i];
    for (int v : candidates(src_[f], tgt_[g])) {
      table_[g * m_ + f] = v;
      if (associative() && canonical_prefix(i + 1)) fill(i + 1);
    }
    table_[g * m_ + f] = kNoIndex;
  }

  void emit() const {
    CategoryTable t;
    for (int x = 0; x < n_; ++x) t.objects.push_back(std::to_string(x));
    for (int f = 0; f < m_; ++f) {
      std::string id = f < n_ ? "id" + std::to_string(f)
                              : "m" + std::to_string(src_[f]) + std::to_string(tgt_[f]) + "_" + std::to_string(local_[f]);
      t.morphisms.push_back({std::move(id), src_[f], tgt_[f]});
    }
    for (int x = 0; x < n_; ++x) t.identity.push_back(x);
    t.table = table_;
    visit_(FinCategory::from_table(std::move(t)));
  }

  int n_;
  std::vector<int> sizes_;
  const std::function<void(const FinCategory&)>& visit_;
  int m_ = 0;
  std::vector<int> src_, tgt_, local_, first_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> group_;
};

bool size_matrix_is_least(int n, const std::vector<int>& sizes) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> image(n * n);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) image[sigma[x] * n + sigma[y]] = sizes[x * n + y];
    if (image < sizes) return false;
  }
  return true;
}

void check_bounds(int max_objects, int max_morphisms) {
  if (max_objects < 0 || max_objects > kEnumerateMaxObjects || max_morphisms < 0 ||
      max_morphisms > kEnumerateMaxMorphisms)
    fail(ErrorKind::BoundsExceeded, "enumeration is limited to " + std::to_string(kEnumerateMaxObjects) + " objects and " +
                                        std::to_string(kEnumerateMaxMorphisms) + " morphisms");
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.emplace_back(name);
  return out;
}

CorpusEntry builtin(std::string_view name) {
  for (const auto& [n, make] : registry())
    if (n == name) return make();
  fail(ErrorKind::UnknownEntry, "no corpus entry named '" + std::string(name) + "'");
}

std::vector<CorpusEntry> all_builtins() {
  std::vector<CorpusEntry> out;
  for (const auto& [_, make] : registry()) out.push_back(make());
  return out;
}

DegreedCategory truncated_simplex(int n) {
  // Monotone maps [p] → [q] as image strings.
  auto maps = [](int p, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int lo) -> void {
      if (i > p) {
        out.push_back(cur);
        return;
      }
      for (int v = lo; v <= q; ++v) {
        cur.push_back(v);
        self(self, i + 1, v);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
    return out;
  };
  auto name = [](int p, int q, const std::vector<int>& img) {
    std::string s = std::to_string(p) + "to" + std::to_string(q) + "_";
    for (int v : img) s += std::to_string(v);
    return s;
  };
  CategoryBuilder b;
  for (int p = 0; p <= n; ++p) {
    std::vector<int> id(p + 1);
    std::iota(id.begin(), id.end(), 0);
    b.object(std::to_string(p), p, name(p, p, id));
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (const auto& m : maps(p, q)) {
        const bool is_id = p == q && std::is_sorted(m.begin(), m.end()) &&
                           std::adjacent_find(m.begin(), m.end()) == m.end();
        if (!is_id) b.arrow(name(p, q, m), std::to_string(p), std::to_string(q));
      }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int r = 0; r <= n; ++r)
        for (const auto& f : maps(p, q))
          for (const auto& g : maps(q, r)) {
            std::vector<int> gf(p + 1);
            for (int i = 0; i <= p; ++i) gf[i] = g[f[i]];
            b.composite(name(q, r, g), name(p, q, f), name(p, r, gf));
          }
  return b.build();
}

void for_each_small_category(int max_objects, int max_morphisms, bool up_to_iso,
                             const std::function<void(const FinCategory&)>& visit) {
  check_bounds(max_objects, max_morphisms);
  for (int n = 1; n <= max_objects; ++n) {
    const int budget = max_morphisms - n;
    if (budget < 0) break;
    std::vector<int> sizes(n * n, 0);
    auto gen = [&](auto&& self, int cell, int left) -> void {
      if (cell == n * n) {
        if (!up_to_iso || size_matrix_is_least(n, sizes)) TableSearch(n, sizes, up_to_iso, visit).run();
        return;
      }
      for (int v = 0; v <= left; ++v) {
        sizes[cell] = v;
        self(self, cell + 1, left - v);
      }
      sizes[cell] = 0;
    };
    gen(gen, 0, budget);
  }
}

void enumerate_small(int max_objects, int max_morphisms, const EnumerateOptions& options,
                     const std::function<void(const DegreedCategory&)>& visit) {
  const int top = options.max_degree.value_or(std::max(0, max_objects - 1));
  for_each_small_category(max_objects, max_morphisms, options.up_to_iso, [&](const FinCategory& C) {
    auto shared = std::make_shared<const FinCategory>(C);
    const int n = C.object_count();
    std::vector<int> degrees(n, 0);
    while (true) {
      visit(DegreedCategory(shared, degrees));
      int i = n - 1;
      while (i >= 0 && degrees[i] == top) degrees[i--] = 0;
      if (i < 0) break;
      ++degrees[i];
    }
  });
}

std::vector<DegreedCategory> enumerate_small(int max_objects, int max_morphisms, const EnumerateOptions& options) {
  std::vector<DegreedCategory> out;
  enumerate_small(max_objects, max_morphisms, options, [&](const DegreedCategory& C) { out.push_back(C); });
  return out;
}

// ---- random diagrams --------------------------------------------------------

namespace {

// Randomized completion of a functor with prescribed set sizes. Returns
// nullopt if no functor exists or the node limit is reached.
std::optional<std::vector<std::vector<int>>> random_functor(const FinCategory& C, const std::vector<int>& sizes,
                                                            std::mt19937_64& rng) {
  const int m = C.morphism_count();
  std::vector<std::vector<int>> maps(m);
  for (MorphismIndex f : C.morphisms()) {
    maps[f].assign(sizes[C.src(f)], kNoIndex);
    if (C.is_identity(f)) std::iota(maps[f].begin(), maps[f].end(), 0);
  }
  auto propagate = [&](std::vector<std::vector<int>>& mp) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (MorphismIndex f : C.morphisms())
        for (ObjectIndex z = 0; z < C.object_count(); ++z)
          for (MorphismIndex g : C.hom(C.tgt(f), z)) {
            const MorphismIndex gf = C.compose(g, f);
            for (int a = 0; a < sizes[C.src(f)]; ++a) {
              const int b = mp[f][a];
              if (b == kNoIndex) continue;
              int& composite = mp[gf][a];
              int& second = mp[g][b];
              if (second == kNoIndex && composite == kNoIndex) continue;
              if (second == kNoIndex) {
                second = composite;
                changed = true;
              } else if (composite == kNoIndex) {
                composite = second;
                changed = true;
              } else if (composite != second) {
                return false;
              }
            }
          }
    }
    return true;
  };
  if (!propagate(maps)) return std::nullopt;
  long nodes = 0;
  std::optional<std::vector<std::vector<int>>> found;
  auto rec = [&](auto&& self, std::vector<std::vector<int>> mp) -> bool {
    if (++nodes > 20000) return true;  // give up
    for (MorphismIndex f : C.morphisms())
      for (int a = 0; a < sizes[C.src(f)]; ++a) {
        if (mp[f][a] != kNoIndex) continue;
        std::vector<int> values(sizes[C.tgt(f)]);
        std::iota(values.begin(), values.end(), 0);
        std::shuffle(values.begin(), values.end(), rng);
        for (int v : values) {
          auto next = mp;
          next[f][a] = v;
          if (propagate(next) && self(self, std::move(next))) return true;
        }
        return false;
      }
    found = std::move(mp);
    return true;
  };
  rec(rec, std::move(maps));
  return found;
}

std::vector<std::string> element_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

SetDiagram random_diagram(std::shared_ptr<const FinCategory> shape, std::mt19937_64& rng, int max_size) {
  const FinCategory& C = *shape;
  std::uniform_int_distribution<int> size_dist(0, max_size);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> sizes(C.object_count());
    for (int& s : sizes) s = size_dist(rng);
    bool into_empty = false;
    for (MorphismIndex f : C.morphisms()) into_empty = into_empty || (sizes[C.src(f)] > 0 && sizes[C.tgt(f)] == 0);
    if (into_empty) continue;
    if (auto maps = random_functor(C, sizes, rng)) {
      std::vector<std::vector<std::string>> sets;
      for (int s : sizes) sets.push_back(element_names(s));
      return SetDiagram(std::move(shape), std::move(sets), std::move(*maps));
    }
  }
  // Empty sets everywhere always form a functor.
  return constant_diagram(std::move(shape), 0);
}

std::optional<DiagramMap> random_diagram_map(std::shared_ptr<const FinCategory> shape, std::mt19937_64& rng,
                                             int max_size, int attempts) {
  for (int attempt = 0; attempt < attempts; ++attempt) {
    SetDiagram A = random_diagram(shape, rng, max_size);
    SetDiagram B = random_diagram(shape, rng, max_size);
    bool blocked = false;
    for (ObjectIndex x = 0; x < shape->object_count(); ++x) blocked = blocked || (A.size(x) > 0 && B.size(x) == 0);
    if (blocked) continue;
    std::optional<Components> chosen;
    NaturalSearchOptions opts;
    opts.shuffle = &rng;
    SearchBudget budget(100'000);
    opts.budget = &budget;
    try {
      search_natural_maps(A, B, opts, [&](const Components& c) {
        chosen = c;
        return false;
      });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeGuardExceeded) throw;
    }
    if (chosen) return DiagramMap(std::move(A), std::move(B), std::move(*chosen));
  }
  return std::nullopt;
}

// ---- random bigluing data ---------------------------------------------------

namespace {

// target^op × source, with object (d, c) named "d,c" and morphism (l, k)
// named "l,k" by index.
FinCategory hom_product(const FinCategory& S, const FinCategory& T) {
  const auto pair_id = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  const int ns = S.object_count(), ms = S.morphism_count(), mt = T.morphism_count();
  CategoryTable t;
  for (ObjectIndex d = 0; d < T.object_count(); ++d)
    for (ObjectIndex c = 0; c < ns; ++c) t.objects.push_back(pair_id(d, c));
  const auto object = [&](ObjectIndex d, ObjectIndex c) { return d * ns + c; };
  for (MorphismIndex l = 0; l < mt; ++l)
    for (MorphismIndex k = 0; k < ms; ++k)
      t.morphisms.push_back({pair_id(l, k), object(T.tgt(l), S.src(k)), object(T.src(l), S.tgt(k))});
  for (ObjectIndex d = 0; d < T.object_count(); ++d)
    for (ObjectIndex c = 0; c < ns; ++c) t.identity.push_back(T.identity(d) * ms + S.identity(c));
  const int m = mt * ms;
  t.table.assign(static_cast<std::size_t>(m) * m, kNoIndex);
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const int l2 = g / ms, k2 = g % ms, l1 = f / ms, k1 = f % ms;
      if (T.src(l1) == T.tgt(l2) && S.tgt(k1) == S.src(k2))
        t.table[static_cast<std::size_t>(g) * m + f] = T.compose(l1, l2) * ms + S.compose(k2, k1);
    }
  return FinCategory::from_table(std::move(t));
}

// A relation between two alpha entries, checked once both are assigned.
struct AlphaConstraint {
  enum Kind { PostCompose, PreCompose, Equal } kind;
  int a, b;
  MorphismIndex k = kNoIndex;  // b = k∘a or b = a∘k
};

}  // namespace

Profunctor random_profunctor(std::shared_ptr<const FinCategory> source, std::shared_ptr<const FinCategory> target,
                             std::mt19937_64& rng, int max_size, std::string_view prefix) {
  const FinCategory& S = *source;
  const FinCategory& T = *target;
  auto P = std::make_shared<const FinCategory>(hom_product(S, T));
  const SetDiagram X = random_diagram(P, rng, max_size);
  const auto pair_id = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };

  const int ns = S.object_count(), nt = T.object_count();
  std::vector<std::vector<std::string>> elements(static_cast<std::size_t>(nt) * ns);
  for (ObjectIndex d = 0; d < nt; ++d)
    for (ObjectIndex c = 0; c < ns; ++c) {
      const int n = X.size(P->object_index(pair_id(d, c)));
      for (int i = 0; i < n; ++i)
        elements[d * ns + c].push_back(std::string(prefix) + "." + T.object_id(d) + "." + S.object_id(c) + "." +
                                       std::to_string(i));
    }
  std::vector<std::vector<std::vector<int>>> left(S.morphism_count(), std::vector<std::vector<int>>(nt));
  for (MorphismIndex k : S.morphisms())
    for (ObjectIndex d = 0; d < nt; ++d) left[k][d] = X.map(P->morphism_index(pair_id(T.identity(d), k)));
  std::vector<std::vector<std::vector<int>>> right(T.morphism_count(), std::vector<std::vector<int>>(ns));
  for (MorphismIndex l : T.morphisms())
    for (ObjectIndex c = 0; c < ns; ++c) right[l][c] = X.map(P->morphism_index(pair_id(l, S.identity(c))));
  return Profunctor(std::move(source), std::move(target), std::move(elements), std::move(left), std::move(right));
}

std::optional<AbstractBigluingData> random_bigluing_data(const DegreedCategory& C,
                                                         std::shared_ptr<const FinCategory> D, std::mt19937_64& rng,
                                                         int max_size, int attempts) {
  const FinCategory& base = C.cat();
  const FinCategory& top = *D;
  const int nc = base.object_count(), nd = top.object_count();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Profunctor U = random_profunctor(D, C.shared_cat(), rng, max_size, "u");
    Profunctor W = random_profunctor(C.shared_cat(), D, rng, max_size, "w");

    // Global element numbering as used by AbstractBigluingData.
    std::vector<int> u_start(nc * nd + 1, 0), w_start(nd * nc + 1, 0);
    for (ObjectIndex c = 0; c < nc; ++c)
      for (ObjectIndex d = 0; d < nd; ++d) u_start[c * nd + d + 1] = u_start[c * nd + d] + U.size(c, d);
    for (ObjectIndex d = 0; d < nd; ++d)
      for (ObjectIndex c = 0; c < nc; ++c) w_start[d * nc + c + 1] = w_start[d * nc + c] + W.size(d, c);
    const int ut = u_start.back(), wt = w_start.back();
    const auto ug = [&](ObjectIndex c, ObjectIndex d, int u) { return u_start[c * nd + d] + u; };
    const auto wg = [&](ObjectIndex d, ObjectIndex c, int w) { return w_start[d * nc + c] + w; };
    const auto var = [&](int w, int u) { return w * ut + u; };

    std::vector<std::span<const MorphismIndex>> domain(static_cast<std::size_t>(wt) * ut);
    std::vector<int> order;
    std::vector<AlphaConstraint> constraints;
    for (ObjectIndex d = 0; d < nd; ++d)
      for (ObjectIndex c2 = 0; c2 < nc; ++c2)
        for (int w = 0; w < W.size(d, c2); ++w)
          for (ObjectIndex c = 0; c < nc; ++c)
            for (int u = 0; u < U.size(c, d); ++u) {
              const int v = var(wg(d, c2, w), ug(c, d, u));
              domain[v] = base.hom(c, c2);
              order.push_back(v);
              for (MorphismIndex k : base.morphisms()) {
                if (base.src(k) == c2)
                  constraints.push_back(
                      {AlphaConstraint::PostCompose, v, var(wg(d, base.tgt(k), W.act_left(k, d, w)), ug(c, d, u)), k});
                if (base.tgt(k) == c)
                  constraints.push_back(
                      {AlphaConstraint::PreCompose, v, var(wg(d, c2, w), ug(base.src(k), d, U.act_right(u, d, k))), k});
              }
            }
    for (MorphismIndex l : top.morphisms()) {
      const ObjectIndex d = top.src(l), d2 = top.tgt(l);
      for (ObjectIndex c2 = 0; c2 < nc; ++c2)
        for (int w = 0; w < W.size(d2, c2); ++w)
          for (ObjectIndex c = 0; c < nc; ++c)
            for (int u = 0; u < U.size(c, d); ++u)
              constraints.push_back({AlphaConstraint::Equal, var(wg(d, c2, W.act_right(w, c2, l)), ug(c, d, u)),
                                     var(wg(d2, c2, w), ug(c, d2, U.act_left(l, c, u)))});
    }
    std::vector<std::vector<int>> touching(domain.size());
    for (int i = 0; i < static_cast<int>(constraints.size()); ++i) {
      touching[constraints[i].a].push_back(i);
      touching[constraints[i].b].push_back(i);
    }

    std::vector<MorphismIndex> value(domain.size(), kNoIndex);
    const auto satisfied = [&](const AlphaConstraint& r) {
      const MorphismIndex a = value[r.a], b = value[r.b];
      if (a == kNoIndex || b == kNoIndex) return true;
      switch (r.kind) {
        case AlphaConstraint::PostCompose: return b == base.compose(r.k, a);
        case AlphaConstraint::PreCompose: return b == base.compose(a, r.k);
        case AlphaConstraint::Equal: return a == b;
      }
      return false;
    };
    long nodes = 0;
    const auto solve = [&](auto&& self, std::size_t i) -> bool {
      if (i == order.size()) return true;
      if (++nodes > 20000) return false;
      const int v = order[i];
      std::vector<MorphismIndex> candidates(domain[v].begin(), domain[v].end());
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (MorphismIndex f : candidates) {
        value[v] = f;
        if (std::all_of(touching[v].begin(), touching[v].end(), [&](int r) { return satisfied(constraints[r]); }) &&
            self(self, i + 1))
          return true;
      }
      value[v] = kNoIndex;
      return false;
    };
    if (!solve(solve, 0)) continue;

    std::vector<std::vector<MorphismIndex>> alpha(wt, std::vector<MorphismIndex>(ut, kNoIndex));
    for (int v : order) alpha[v / ut][v % ut] = value[v];
    return AbstractBigluingData(C, D, std::move(U), std::move(W), std::move(alpha));
  }
  return std::nullopt;
}

}  // namespace reedy
