#include "reedy/bigluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace reedy {

namespace {

[[noreturn]] void invalid(const std::string& message) { fail(ErrorKind::InvalidBigluingData, message); }

std::vector<int> starts(const Profunctor& H, int rows, int cols) {
  std::vector<int> out(static_cast<std::size_t>(rows) * cols);
  int next = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      out[static_cast<std::size_t>(r) * cols + c] = next;
      next += H.size(r, c);
    }
  return out;
}

int total(const Profunctor& H, int rows, int cols) {
  int n = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) n += H.size(r, c);
  return n;
}

// Rebuilds H with the elements of every set permuted: perm[set][old] = new.
Profunctor relabel(const Profunctor& H, const std::vector<std::vector<int>>& perm,
                   std::shared_ptr<const FinCategory> source, std::shared_ptr<const FinCategory> target) {
  const int ns = source->object_count(), nt = target->object_count();
  auto at = [&](int d, int c) { return static_cast<std::size_t>(d) * ns + c; };
  std::vector<std::vector<std::string>> elements(static_cast<std::size_t>(nt) * ns);
  for (int d = 0; d < nt; ++d)
    for (int c = 0; c < ns; ++c) {
      elements[at(d, c)].resize(H.size(d, c));
      for (int h = 0; h < H.size(d, c); ++h) elements[at(d, c)][perm[at(d, c)][h]] = H.elements(d, c)[h];
    }
  std::vector<std::vector<std::vector<int>>> left(source->morphism_count(), std::vector<std::vector<int>>(nt));
  for (MorphismIndex k : source->morphisms())
    for (int d = 0; d < nt; ++d) {
      const int c = source->src(k), c2 = source->tgt(k);
      left[k][d].resize(H.size(d, c));
      for (int h = 0; h < H.size(d, c); ++h) left[k][d][perm[at(d, c)][h]] = perm[at(d, c2)][H.act_left(k, d, h)];
    }
  std::vector<std::vector<std::vector<int>>> right(target->morphism_count(), std::vector<std::vector<int>>(ns));
  for (MorphismIndex l : target->morphisms())
    for (int c = 0; c < ns; ++c) {
      const int d = target->tgt(l), d2 = target->src(l);
      right[l][c].resize(H.size(d, c));
      for (int h = 0; h < H.size(d, c); ++h) right[l][c][perm[at(d, c)][h]] = perm[at(d2, c)][H.act_right(h, c, l)];
    }
  return Profunctor(std::move(source), std::move(target), std::move(elements), std::move(left), std::move(right));
}

std::vector<std::vector<int>> sorting_permutation(const Profunctor& H, int rows, int cols) {
  std::vector<std::vector<int>> perm(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& tokens = H.elements(r, c);
      std::vector<int> order(tokens.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return tokens[a] < tokens[b]; });
      auto& p = perm[static_cast<std::size_t>(r) * cols + c];
      p.resize(tokens.size());
      for (std::size_t i = 0; i < order.size(); ++i) p[order[i]] = static_cast<int>(i);
    }
  return perm;
}

// What each morphism of the collage stands for.
struct Piece {
  enum Kind { Base, Top, Up, Across, Tensor } kind = Base;
  int index = 0;  // morphism of C or D, or element of U / W within its set
  ObjectIndex c = kNoIndex, d = kNoIndex;
  // Tensor pieces: a representative (w ∈ W(d, c), u ∈ U(c, d2)).
  ObjectIndex d2 = kNoIndex;
  int w = 0, u = 0;
};

struct CollageBuild {
  DegreedCategory E;
  std::vector<Piece> piece;                  // per collage morphism
  std::vector<ObjectIndex> base_object;      // C object → collage object
  std::vector<ObjectIndex> top_object;       // D object → collage object
  std::vector<MorphismIndex> base_morphism;  // C morphism → collage morphism
  std::vector<MorphismIndex> top_morphism;   // D morphism → collage morphism
};

CollageBuild build_collage(const AbstractBigluingData& abd) {
  const FinCategory& C = abd.base().cat();
  const FinCategory& D = abd.top();
  const Profunctor& U = abd.U();
  const Profunctor& W = abd.W();
  const int nc = C.object_count(), nd = D.object_count();

  CategoryTable t;
  std::vector<int> degrees;
  const int top_degree = abd.base().max_degree() + 1;
  for (ObjectIndex c = 0; c < nc; ++c) {
    t.objects.push_back(C.object_id(c));
    degrees.push_back(abd.base().degree(c));
  }
  for (ObjectIndex d = 0; d < nd; ++d) {
    t.objects.push_back(D.object_id(d));
    degrees.push_back(top_degree);
  }
  auto top = [&](ObjectIndex d) { return nc + d; };

  std::vector<Piece> pieces;
  auto add = [&](std::string id, ObjectIndex s, ObjectIndex g, Piece p) {
    t.morphisms.push_back({std::move(id), s, g});
    pieces.push_back(p);
    return static_cast<MorphismIndex>(pieces.size() - 1);
  };
  for (MorphismIndex k : C.morphisms()) add(C.morphism_id(k), C.src(k), C.tgt(k), {Piece::Base, k});
  for (MorphismIndex l : D.morphisms()) add(D.morphism_id(l), top(D.src(l)), top(D.tgt(l)), {Piece::Top, l});
  std::vector<std::vector<std::vector<MorphismIndex>>> up_at(nc, std::vector<std::vector<MorphismIndex>>(nd));
  std::vector<std::vector<std::vector<MorphismIndex>>> across_at(nd, std::vector<std::vector<MorphismIndex>>(nc));
  for (ObjectIndex c = 0; c < nc; ++c)
    for (ObjectIndex d = 0; d < nd; ++d)
      for (int u = 0; u < U.size(c, d); ++u)
        up_at[c][d].push_back(add(U.elements(c, d)[u], c, top(d), {Piece::Up, u, c, d}));
  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c = 0; c < nc; ++c)
      for (int w = 0; w < W.size(d, c); ++w)
        across_at[d][c].push_back(add(W.elements(d, c)[w], top(d), c, {Piece::Across, w, c, d}));

  // Tensor classes (w, u) modulo (w, u·k) ∼ (k·w, u).
  const int wt = total(W, nd, nc), ut = total(U, nc, nd);
  std::vector<std::vector<MorphismIndex>> tensor_of(wt, std::vector<MorphismIndex>(ut, kNoIndex));
  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex d2 = 0; d2 < nd; ++d2) {
      struct Pair {
        ObjectIndex c;
        int w, u;
      };
      std::vector<Pair> pairs;
      std::map<std::tuple<ObjectIndex, int, int>, int> where;
      for (ObjectIndex c = 0; c < nc; ++c)
        for (int w = 0; w < W.size(d, c); ++w)
          for (int u = 0; u < U.size(c, d2); ++u) {
            where[{c, w, u}] = static_cast<int>(pairs.size());
            pairs.push_back({c, w, u});
          }
      std::vector<std::pair<int, int>> identify;
      for (MorphismIndex k : C.morphisms()) {
        const ObjectIndex c = C.src(k), c2 = C.tgt(k);
        for (int w = 0; w < W.size(d, c); ++w)
          for (int u = 0; u < U.size(c2, d2); ++u)
            identify.emplace_back(where.at({c, w, U.act_right(u, d2, k)}), where.at({c2, W.act_left(k, d, w), u}));
      }
      const Quotient q = quotient(static_cast<int>(pairs.size()), identify);
      std::vector<int> best(q.class_count(), -1);
      auto key = [&](int i) { return std::pair{W.elements(d, pairs[i].c)[pairs[i].w], U.elements(pairs[i].c, d2)[pairs[i].u]}; };
      for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        int& b = best[q.class_of[i]];
        if (b < 0 || key(i) < key(b)) b = i;
      }
      std::vector<MorphismIndex> class_morphism(q.class_count());
      for (int k = 0; k < q.class_count(); ++k) {
        const Pair& p = pairs[best[k]];
        const auto [wname, uname] = key(best[k]);
        Piece piece{Piece::Tensor, k, p.c, d};
        piece.d2 = d2;
        piece.w = p.w;
        piece.u = p.u;
        class_morphism[k] = add("<" + wname + ";" + uname + ">", top(d), top(d2), piece);
      }
      for (std::size_t i = 0; i < pairs.size(); ++i)
        tensor_of[abd.w_global(d, pairs[i].c, pairs[i].w)][abd.u_global(pairs[i].c, d2, pairs[i].u)] =
            class_morphism[q.class_of[i]];
    }

  for (ObjectIndex c = 0; c < nc; ++c) t.identity.push_back(C.identity(c));
  for (ObjectIndex d = 0; d < nd; ++d) t.identity.push_back(C.morphism_count() + D.identity(d));

  std::set<std::string> seen;
  for (const auto& o : t.objects)
    if (!seen.insert(o).second) invalid("object identifier '" + o + "' is used by both C and D");
  seen.clear();
  for (const auto& m : t.morphisms)
    if (!seen.insert(m.id).second) invalid("morphism identifier '" + m.id + "' is used twice in the collage");

  const int mc = C.morphism_count();
  auto base = [&](MorphismIndex k) { return k; };
  auto topm = [&](MorphismIndex l) { return mc + l; };
  auto up = [&](ObjectIndex c, ObjectIndex d, int u) { return up_at[c][d][u]; };
  auto across = [&](ObjectIndex d, ObjectIndex c, int w) { return across_at[d][c][w]; };
  auto tensor = [&](ObjectIndex d, ObjectIndex c, int w, ObjectIndex d2, int u) {
    return tensor_of[abd.w_global(d, c, w)][abd.u_global(c, d2, u)];
  };

  const auto M = pieces.size();
  t.table.assign(M * M, kNoIndex);
  for (std::size_t g = 0; g < M; ++g)
    for (std::size_t f = 0; f < M; ++f) {
      if (t.morphisms[f].tgt != t.morphisms[g].src) continue;
      const Piece& pf = pieces[f];
      const Piece& pg = pieces[g];
      MorphismIndex r = kNoIndex;
      switch (pf.kind) {
        case Piece::Base:
          if (pg.kind == Piece::Base) r = base(C.compose(pg.index, pf.index));
          else r = up(C.src(pf.index), pg.d, U.act_right(pg.index, pg.d, pf.index));
          break;
        case Piece::Top:
          if (pg.kind == Piece::Top) r = topm(D.compose(pg.index, pf.index));
          else if (pg.kind == Piece::Across) r = across(D.src(pf.index), pg.c, W.act_right(pg.index, pg.c, pf.index));
          else r = tensor(D.src(pf.index), pg.c, W.act_right(pg.w, pg.c, pf.index), pg.d2, pg.u);
          break;
        case Piece::Up:
          if (pg.kind == Piece::Top) r = up(pf.c, D.tgt(pg.index), U.act_left(pg.index, pf.c, pf.index));
          else if (pg.kind == Piece::Across) r = base(abd.alpha(pg.d, pg.c, pg.index, pf.c, pf.index));
          else r = up(pf.c, pg.d2, U.act_right(pg.u, pg.d2, abd.alpha(pg.d, pg.c, pg.w, pf.c, pf.index)));
          break;
        case Piece::Across:
          if (pg.kind == Piece::Base) r = across(pf.d, C.tgt(pg.index), W.act_left(pg.index, pf.d, pf.index));
          else r = tensor(pf.d, pf.c, pf.index, pg.d, pg.index);
          break;
        case Piece::Tensor: {
          if (pg.kind == Piece::Top) {
            r = tensor(pf.d, pf.c, pf.w, D.tgt(pg.index), U.act_left(pg.index, pf.c, pf.u));
            break;
          }
          const ObjectIndex c2 = pg.c;
          const int gw = pg.kind == Piece::Across ? pg.index : pg.w;
          const MorphismIndex a = abd.alpha(pg.d, c2, gw, pf.c, pf.u);
          const int w = W.act_left(a, pf.d, pf.w);
          r = pg.kind == Piece::Across ? across(pf.d, c2, w) : tensor(pf.d, c2, w, pg.d2, pg.u);
          break;
        }
      }
      t.table[g * M + f] = r;
    }

  FinCategory E;
  try {
    E = FinCategory::from_table(t);
  } catch (const ValidationError& e) {
    invalid(std::string("the collage is not a category: ") + e.what());
  }
  CollageBuild out;
  out.piece.resize(M);
  for (std::size_t i = 0; i < M; ++i) out.piece[E.morphism_index(t.morphisms[i].id)] = pieces[i];
  std::vector<int> final_degrees(E.object_count());
  for (std::size_t i = 0; i < t.objects.size(); ++i) final_degrees[E.object_index(t.objects[i])] = degrees[i];
  for (ObjectIndex c = 0; c < nc; ++c) out.base_object.push_back(E.object_index(C.object_id(c)));
  for (ObjectIndex d = 0; d < nd; ++d) out.top_object.push_back(E.object_index(D.object_id(d)));
  for (MorphismIndex k : C.morphisms()) out.base_morphism.push_back(E.morphism_index(C.morphism_id(k)));
  for (MorphismIndex l : D.morphisms()) out.top_morphism.push_back(E.morphism_index(D.morphism_id(l)));
  out.E = DegreedCategory(std::move(E), std::move(final_degrees));
  return out;
}

int coend_index(const Coend& T, ObjectIndex c, int u, int a) {
  const CoendElement key{c, u, a};
  auto it = std::lower_bound(T.elements.begin(), T.elements.end(), key);
  if (it == T.elements.end() || *it != key) fail(ErrorKind::InternalInvariantBroken, "coend element missing");
  return static_cast<int>(it - T.elements.begin());
}

int family_index(const std::vector<Components>& families, const Components& f) {
  auto it = std::lower_bound(families.begin(), families.end(), f);
  if (it == families.end() || *it != f) return kNoIndex;
  return static_cast<int>(it - families.begin());
}

}  // namespace

AbstractBigluingData::AbstractBigluingData(DegreedCategory C, std::shared_ptr<const FinCategory> D, Profunctor U,
                                           Profunctor W, std::vector<std::vector<MorphismIndex>> table)
    : C_(std::move(C)), D_(std::move(D)), U_(std::move(U)), W_(std::move(W)), alpha_(std::move(table)) {
  const FinCategory& base = C_.cat();
  const FinCategory& top = *D_;
  if (!(U_.source() == top) || !(U_.target() == base))
    invalid("U must be a profunctor with sets U(c, d) for c in C and d in D");
  if (!(W_.source() == base) || !(W_.target() == top))
    invalid("W must be a profunctor with sets W(d, c) for d in D and c in C");
  const int nc = base.object_count(), nd = top.object_count();
  u_start_ = starts(U_, nc, nd);
  w_start_ = starts(W_, nd, nc);
  const int ut = total(U_, nc, nd), wt = total(W_, nd, nc);
  if (static_cast<int>(alpha_.size()) != wt) invalid("alpha must have one row per element of W");
  for (const auto& row : alpha_)
    if (static_cast<int>(row.size()) != ut) invalid("alpha must have one column per element of U");

  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c2 = 0; c2 < nc; ++c2)
      for (int w = 0; w < W_.size(d, c2); ++w)
        for (ObjectIndex d0 = 0; d0 < nd; ++d0)
          for (ObjectIndex c = 0; c < nc; ++c)
            for (int u = 0; u < U_.size(c, d0); ++u) {
              const MorphismIndex a = alpha_[w_global(d, c2, w)][u_global(c, d0, u)];
              const std::string where = "alpha(" + W_.elements(d, c2)[w] + ", " + U_.elements(c, d0)[u] + ")";
              if (d0 != d) {
                if (a != kNoIndex) invalid(where + " pairs elements over different objects of D");
                continue;
              }
              if (a < 0 || a >= base.morphism_count() || base.src(a) != c || base.tgt(a) != c2)
                invalid(where + " is not a morphism " + base.object_id(c) + " -> " + base.object_id(c2));
            }

  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c2 = 0; c2 < nc; ++c2)
      for (int w = 0; w < W_.size(d, c2); ++w)
        for (ObjectIndex c = 0; c < nc; ++c)
          for (int u = 0; u < U_.size(c, d); ++u) {
            const MorphismIndex a = alpha(d, c2, w, c, u);
            const std::string where = "alpha(" + W_.elements(d, c2)[w] + ", " + U_.elements(c, d)[u] + ")";
            for (MorphismIndex k : base.morphisms()) {
              if (base.src(k) == c2 && alpha(d, base.tgt(k), W_.act_left(k, d, w), c, u) != base.compose(k, a))
                invalid(where + " is not natural in its target under " + base.morphism_id(k));
              if (base.tgt(k) == c && alpha(d, c2, w, base.src(k), U_.act_right(u, d, k)) != base.compose(a, k))
                invalid(where + " is not natural in its source under " + base.morphism_id(k));
            }
          }

  for (MorphismIndex l : top.morphisms()) {
    const ObjectIndex d = top.src(l), d2 = top.tgt(l);
    for (ObjectIndex c2 = 0; c2 < nc; ++c2)
      for (int w = 0; w < W_.size(d2, c2); ++w)
        for (ObjectIndex c = 0; c < nc; ++c)
          for (int u = 0; u < U_.size(c, d); ++u)
            if (alpha(d, c2, W_.act_right(w, c2, l), c, u) != alpha(d2, c2, w, c, U_.act_left(l, c, u)))
              invalid("alpha is not balanced over " + top.morphism_id(l) + " at (" + W_.elements(d2, c2)[w] + ", " +
                      U_.elements(c, d)[u] + ")");
  }
}

AbstractBigluingData canonical_form(const AbstractBigluingData& abd) {
  const auto C = abd.base().shared_cat();
  const auto D = abd.shared_top();
  const int nc = C->object_count(), nd = D->object_count();
  const auto pu = sorting_permutation(abd.U(), nc, nd);
  const auto pw = sorting_permutation(abd.W(), nd, nc);
  Profunctor U = relabel(abd.U(), pu, D, C);
  Profunctor W = relabel(abd.W(), pw, C, D);
  const auto us = starts(U, nc, nd), ws = starts(W, nd, nc);
  std::vector<std::vector<MorphismIndex>> alpha(abd.alpha_table().size(),
                                                std::vector<MorphismIndex>(abd.alpha_table().empty() ? 0 : abd.alpha_table()[0].size(), kNoIndex));
  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c2 = 0; c2 < nc; ++c2)
      for (int w = 0; w < abd.W().size(d, c2); ++w)
        for (ObjectIndex c = 0; c < nc; ++c)
          for (int u = 0; u < abd.U().size(c, d); ++u)
            alpha[ws[d * nc + c2] + pw[d * nc + c2][w]][us[c * nd + d] + pu[c * nd + d][u]] = abd.alpha(d, c2, w, c, u);
  return AbstractBigluingData(abd.base(), D, std::move(U), std::move(W), std::move(alpha));
}

DegreedCategory collage(const AbstractBigluingData& abd) { return build_collage(abd).E; }

AbstractBigluingData recognize_collage(const DegreedCategory& E, int split_degree) {
  const FinCategory& cat = E.cat();
  const int n = cat.object_count();
  std::vector<bool> lower(n), upper(n);
  for (ObjectIndex x = 0; x < n; ++x) {
    lower[x] = E.degree(x) < split_degree;
    upper[x] = !lower[x];
  }

  auto factors_through_lower = [&](MorphismIndex f) {
    for (const Factorization& fac : all_factorizations(cat, f))
      if (lower[fac.mid]) return true;
    return false;
  };
  std::vector<bool> lower_morphisms(cat.morphism_count()), candidates(cat.morphism_count());
  for (MorphismIndex f : cat.morphisms()) {
    lower_morphisms[f] = lower[cat.src(f)] && lower[cat.tgt(f)];
    if (!upper[cat.src(f)] || !upper[cat.tgt(f)]) continue;
    if (!factors_through_lower(f)) {
      candidates[f] = true;
      continue;
    }
    if (cat.is_identity(f))
      fail(ErrorKind::NotACollage, "the identity of '" + cat.object_id(cat.src(f)) + "' factors through the lower objects");
    if (!factorization_components(E, f, split_degree).connected())
      fail(ErrorKind::NotACollage,
           "the factorizations of '" + cat.morphism_id(f) + "' through the lower objects are not connected");
  }
  const auto base_sub = subcategory(cat, lower, lower_morphisms);
  const auto top_sub = subcategory(cat, upper, candidates);
  if (!top_sub)
    fail(ErrorKind::NotACollage, "the morphisms between upper objects that avoid the lower objects are not closed under composition");

  std::vector<int> degrees;
  for (ObjectIndex x : base_sub->object_origin) degrees.push_back(E.degree(x));
  DegreedCategory C(base_sub->cat, std::move(degrees));
  const auto& D = top_sub->cat;
  const FinCategory& bc = *base_sub->cat;
  const int nc = bc.object_count(), nd = D->object_count();
  const auto& co = base_sub->object_origin;
  const auto& dobj = top_sub->object_origin;

  std::vector<int> position(cat.morphism_count());
  for (ObjectIndex x = 0; x < n; ++x)
    for (ObjectIndex y = 0; y < n; ++y) {
      const auto h = cat.hom(x, y);
      for (std::size_t i = 0; i < h.size(); ++i) position[h[i]] = static_cast<int>(i);
    }
  auto pos = [&](MorphismIndex f) { return position[f]; };
  std::vector<MorphismIndex> base_local(cat.morphism_count(), kNoIndex);
  for (std::size_t i = 0; i < base_sub->morphism_origin.size(); ++i) base_local[base_sub->morphism_origin[i]] = static_cast<int>(i);

  auto names = [&](ObjectIndex x, ObjectIndex y) {
    std::vector<std::string> out;
    for (MorphismIndex f : cat.hom(x, y)) out.push_back(cat.morphism_id(f));
    return out;
  };

  // U: sets hom(c, d); D acts on the left, C on the right.
  std::vector<std::vector<std::string>> u_elements(static_cast<std::size_t>(nc) * nd);
  for (ObjectIndex c = 0; c < nc; ++c)
    for (ObjectIndex d = 0; d < nd; ++d) u_elements[c * nd + d] = names(co[c], dobj[d]);
  std::vector<std::vector<std::vector<int>>> u_left(D->morphism_count(), std::vector<std::vector<int>>(nc));
  for (MorphismIndex l : D->morphisms()) {
    const MorphismIndex le = top_sub->morphism_origin[l];
    for (ObjectIndex c = 0; c < nc; ++c)
      for (MorphismIndex u : cat.hom(co[c], cat.src(le))) u_left[l][c].push_back(pos(cat.compose(le, u)));
  }
  std::vector<std::vector<std::vector<int>>> u_right(bc.morphism_count(), std::vector<std::vector<int>>(nd));
  for (MorphismIndex k : bc.morphisms()) {
    const MorphismIndex ke = base_sub->morphism_origin[k];
    for (ObjectIndex d = 0; d < nd; ++d)
      for (MorphismIndex u : cat.hom(cat.tgt(ke), dobj[d])) u_right[k][d].push_back(pos(cat.compose(u, ke)));
  }
  Profunctor U(D, base_sub->cat, std::move(u_elements), std::move(u_left), std::move(u_right));

  // W: sets hom(d, c); C acts on the left, D on the right.
  std::vector<std::vector<std::string>> w_elements(static_cast<std::size_t>(nd) * nc);
  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c = 0; c < nc; ++c) w_elements[d * nc + c] = names(dobj[d], co[c]);
  std::vector<std::vector<std::vector<int>>> w_left(bc.morphism_count(), std::vector<std::vector<int>>(nd));
  for (MorphismIndex k : bc.morphisms()) {
    const MorphismIndex ke = base_sub->morphism_origin[k];
    for (ObjectIndex d = 0; d < nd; ++d)
      for (MorphismIndex w : cat.hom(dobj[d], cat.src(ke))) w_left[k][d].push_back(pos(cat.compose(ke, w)));
  }
  std::vector<std::vector<std::vector<int>>> w_right(D->morphism_count(), std::vector<std::vector<int>>(nc));
  for (MorphismIndex l : D->morphisms()) {
    const MorphismIndex le = top_sub->morphism_origin[l];
    for (ObjectIndex c = 0; c < nc; ++c)
      for (MorphismIndex w : cat.hom(cat.tgt(le), co[c])) w_right[l][c].push_back(pos(cat.compose(w, le)));
  }
  Profunctor W(base_sub->cat, D, std::move(w_elements), std::move(w_left), std::move(w_right));

  std::vector<std::vector<MorphismIndex>> alpha(total(W, nd, nc), std::vector<MorphismIndex>(total(U, nc, nd), kNoIndex));
  const auto us = starts(U, nc, nd), ws = starts(W, nd, nc);
  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c2 = 0; c2 < nc; ++c2)
      for (MorphismIndex w : cat.hom(dobj[d], co[c2]))
        for (ObjectIndex c = 0; c < nc; ++c)
          for (MorphismIndex u : cat.hom(co[c], dobj[d]))
            alpha[ws[d * nc + c2] + pos(w)][us[c * nd + d] + pos(u)] = base_local[cat.compose(w, u)];
  return AbstractBigluingData(std::move(C), D, std::move(U), std::move(W), std::move(alpha));
}

GluingCorner gluing_corner(const AbstractBigluingData& abd, const SetDiagram& M, long long max_search) {
  const FinCategory& C = abd.base().cat();
  if (!(M.shape() == C)) fail(ErrorKind::NotAFunctor, "the lower diagram is not indexed by C");
  const auto op = std::make_shared<const FinCategory>(opposite(C));
  const FinCategory& D = abd.top();
  const Profunctor& U = abd.U();
  const Profunctor& W = abd.W();
  const int nc = C.object_count();

  GluingCorner out;
  for (ObjectIndex d = 0; d < D.object_count(); ++d) {
    // U(−, d) on the opposite of C, objects matched by id.
    std::vector<std::vector<std::string>> usets(nc);
    for (ObjectIndex c = 0; c < nc; ++c) usets[op->object_index(C.object_id(c))] = U.elements(c, d);
    std::vector<std::vector<int>> umaps(op->morphism_count());
    for (MorphismIndex k : C.morphisms()) {
      auto& m = umaps[op->morphism_index(C.morphism_id(k))];
      for (int u = 0; u < U.size(C.tgt(k), d); ++u) m.push_back(U.act_right(u, d, k));
    }
    const SetDiagram Ud(op, std::move(usets), std::move(umaps));

    std::vector<std::vector<std::string>> wsets(nc);
    for (ObjectIndex c = 0; c < nc; ++c) wsets[c] = W.elements(d, c);
    std::vector<std::vector<int>> wmaps(C.morphism_count());
    for (MorphismIndex k : C.morphisms())
      for (int w = 0; w < W.size(d, C.src(k)); ++w) wmaps[k].push_back(W.act_left(k, d, w));
    const SetDiagram Wd(M.shared_shape(), std::move(wsets), std::move(wmaps));

    Coend T = weighted_colimit(Ud, M);
    auto families = weighted_limit(Wd, M, max_search);
    FinFunction bar{static_cast<int>(families.size()), {}};
    for (int rep : T.classes.representative) {
      const CoendElement& e = T.elements[rep];
      Components f(nc);
      for (ObjectIndex c2 = 0; c2 < nc; ++c2)
        for (int w = 0; w < W.size(d, c2); ++w) f[c2].push_back(M.apply(abd.alpha(d, c2, w, e.object, e.weight), e.value));
      const int i = family_index(families, f);
      if (i == kNoIndex) fail(ErrorKind::InternalInvariantBroken, "alpha does not produce a natural family");
      bar.image.push_back(i);
    }
    out.tensor.push_back(std::move(T));
    out.cotensor.push_back(std::move(families));
    out.alpha_bar.push_back(std::move(bar));
  }
  return out;
}

BigluedDiagram biglue_split(const AbstractBigluingData& abd, const SetDiagram& X, long long max_search) {
  const CollageBuild b = build_collage(abd);
  const FinCategory& E = b.E.cat();
  if (!(X.shape() == E)) fail(ErrorKind::NotAFunctor, "the diagram is not indexed by the collage");
  const FinCategory& C = abd.base().cat();
  const FinCategory& D = abd.top();

  auto part = [&](std::shared_ptr<const FinCategory> shape, const std::vector<ObjectIndex>& objs,
                  const std::vector<MorphismIndex>& morphs) {
    std::vector<std::vector<std::string>> sets;
    for (ObjectIndex x : objs) sets.push_back(X.elements(x));
    std::vector<std::vector<int>> maps;
    for (MorphismIndex f : morphs) maps.push_back(X.map(f));
    return SetDiagram(std::move(shape), std::move(sets), std::move(maps));
  };
  SetDiagram M = part(abd.base().shared_cat(), b.base_object, b.base_morphism);
  SetDiagram N = part(abd.shared_top(), b.top_object, b.top_morphism);
  GluingCorner corner = gluing_corner(abd, M, max_search);

  std::vector<FinFunction> phi, gamma;
  for (ObjectIndex d = 0; d < D.object_count(); ++d) {
    const ObjectIndex de = b.top_object[d];
    FinFunction p{X.size(de), {}};
    for (int rep : corner.tensor[d].classes.representative) {
      const CoendElement& e = corner.tensor[d].elements[rep];
      const MorphismIndex u = E.morphism_index(abd.U().elements(e.object, d)[e.weight]);
      p.image.push_back(X.apply(u, e.value));
    }
    FinFunction g{static_cast<int>(corner.cotensor[d].size()), {}};
    for (int x = 0; x < X.size(de); ++x) {
      Components f(C.object_count());
      for (ObjectIndex c = 0; c < C.object_count(); ++c)
        for (const auto& w : abd.W().elements(d, c)) f[c].push_back(X.apply(E.morphism_index(w), x));
      const int i = family_index(corner.cotensor[d], f);
      if (i == kNoIndex) fail(ErrorKind::InternalInvariantBroken, "restriction along W is not a natural family");
      g.image.push_back(i);
    }
    if (compose(g, p) != corner.alpha_bar[d])
      fail(ErrorKind::InternalInvariantBroken, "gamma after phi differs from alpha at '" + D.object_id(d) + "'");
    phi.push_back(std::move(p));
    gamma.push_back(std::move(g));
  }
  return BigluedDiagram{std::move(M),  std::move(N),          std::move(corner.tensor), std::move(corner.cotensor),
                        std::move(phi), std::move(gamma), std::move(corner.alpha_bar)};
}

SetDiagram biglue_merge(const AbstractBigluingData& abd, const SetDiagram& M, const SetDiagram& N,
                        const std::vector<FinFunction>& phi, const std::vector<FinFunction>& gamma,
                        long long max_search) {
  const FinCategory& D = abd.top();
  if (!(N.shape() == D)) fail(ErrorKind::NotAFunctor, "the upper diagram is not indexed by D");
  const GluingCorner corner = gluing_corner(abd, M, max_search);
  const int nd = D.object_count();
  if (static_cast<int>(phi.size()) != nd || static_cast<int>(gamma.size()) != nd)
    fail(ErrorKind::MalformedInput, "phi and gamma need one component per object of D");
  for (ObjectIndex d = 0; d < nd; ++d) {
    const bool typed = phi[d].domain() == corner.tensor[d].classes.class_count() && phi[d].codomain == N.size(d) &&
                       gamma[d].domain() == N.size(d) &&
                       gamma[d].codomain == static_cast<int>(corner.cotensor[d].size());
    if (!typed) fail(ErrorKind::MalformedInput, "phi or gamma at '" + D.object_id(d) + "' has the wrong type");
    for (int v : phi[d].image)
      if (v < 0 || v >= phi[d].codomain) fail(ErrorKind::MalformedInput, "phi value out of range");
    for (int v : gamma[d].image)
      if (v < 0 || v >= gamma[d].codomain) fail(ErrorKind::MalformedInput, "gamma value out of range");
    if (compose(gamma[d], phi[d]) != corner.alpha_bar[d])
      fail(ErrorKind::FactorizationMismatch, "gamma after phi differs from alpha at '" + D.object_id(d) + "'");
  }

  const CollageBuild b = build_collage(abd);
  const FinCategory& E = b.E.cat();
  std::vector<std::vector<std::string>> sets(E.object_count());
  for (ObjectIndex c = 0; c < M.shape().object_count(); ++c) sets[b.base_object[c]] = M.elements(c);
  for (ObjectIndex d = 0; d < nd; ++d) sets[b.top_object[d]] = N.elements(d);

  auto up_value = [&](ObjectIndex c, ObjectIndex d, int u, int a) {
    const Coend& T = corner.tensor[d];
    return phi[d](T.classes.class_of[coend_index(T, c, u, a)]);
  };
  auto across_value = [&](ObjectIndex d, ObjectIndex c, int w, int x) { return corner.cotensor[d][gamma[d](x)][c][w]; };

  std::vector<std::vector<int>> maps(E.morphism_count());
  for (MorphismIndex f : E.morphisms()) {
    const Piece& p = b.piece[f];
    const int n = static_cast<int>(sets[E.src(f)].size());
    for (int a = 0; a < n; ++a) {
      switch (p.kind) {
        case Piece::Base: maps[f].push_back(M.apply(p.index, a)); break;
        case Piece::Top: maps[f].push_back(N.apply(p.index, a)); break;
        case Piece::Up: maps[f].push_back(up_value(p.c, p.d, p.index, a)); break;
        case Piece::Across: maps[f].push_back(across_value(p.d, p.c, p.index, a)); break;
        case Piece::Tensor: maps[f].push_back(up_value(p.c, p.d2, p.u, across_value(p.d, p.c, p.w, a))); break;
      }
    }
  }
  try {
    return SetDiagram(b.E.shared_cat(), std::move(sets), std::move(maps));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAFunctor) throw;
    fail(ErrorKind::NotFunctorial, std::string("phi or gamma is not natural in D: ") + e.what());
  }
}

}  // namespace reedy
