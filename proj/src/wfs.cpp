#include "reedy/wfs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace reedy {

namespace {

void require_discrete_bistratified(const DegreedCategory& C) {
  const DegreeAnalysis A(C);
  if (auto r = check_bistratified(A); !r)
    fail(ErrorKind::NotDiscreteBistratified, "not bistratified: " + describe(*r.witness, C.cat()));
  if (auto r = check_discrete_strata(A); !r)
    fail(ErrorKind::NotDiscreteBistratified, "strata are not discrete: " + describe(*r.witness, C.cat()));
}

void require_shape(const DegreedCategory& C, const DiagramMap& m) {
  if (!(m.shape() == C.cat())) fail(ErrorKind::NotNatural, "the diagram map is not indexed by the given category");
}

std::vector<int> family_at(const MatchingObject& M, const SetDiagram& X, int a) {
  std::vector<int> family;
  family.reserve(M.index.size());
  for (MorphismIndex f : M.index) family.push_back(X.apply(f, a));
  return family;
}

// The boundary data of m: A → B at one object.
struct Corner {
  ObjectIndex x = kNoIndex;
  LatchingObject LA, LB;
  MatchingObject MA, MB;
  // L_xB ⊔_{L_xA} A_x: LB classes first, then A_x, quotiented.
  Quotient pushout;
  FinFunction latching;  // pushout classes → B_x
  // M_xA ×_{M_xB} B_x as (family of MA, element of B_x) pairs.
  std::vector<std::pair<int, int>> pullback;
  FinFunction matching;  // A_x → pullback
};

class CornerBuilder {
 public:
  CornerBuilder(const DegreedCategory& C, const DiagramMap& m, long long max_search)
      : C_(C), m_(m), budget_(max_search) {}

  Corner at(ObjectIndex x) {
    const FinCategory& cat = C_.cat();
    const SetDiagram& A = m_.source();
    const SetDiagram& B = m_.target();
    const LowerPart& low = lower(C_.degree(x));
    const auto& [A_low, B_low] = restricted(C_.degree(x));

    Corner k;
    k.x = x;
    k.LA = latching_from_lower(C_, x, low, A_low);
    k.LB = latching_from_lower(C_, x, low, B_low);
    k.MA = matching_from_lower(C_, x, low, A_low, budget_);
    k.MB = matching_from_lower(C_, x, low, B_low, budget_);

    const int nlb = k.LB.size();
    std::vector<std::pair<int, int>> identify;
    for (int c = 0; c < k.LA.size(); ++c) {
      const auto [s, a] = k.LA.pairs[k.LA.classes.representative[c]];
      const MorphismIndex f = k.LA.index[s];
      const ObjectIndex z = cat.src(f);
      identify.emplace_back(k.LB.class_of(f, m_.component(z)[a]), nlb + A.apply(f, a));
    }
    k.pushout = quotient(nlb + A.size(x), identify);
    k.latching.codomain = B.size(x);
    for (int rep : k.pushout.representative) {
      if (rep < nlb) {
        const auto [s, b] = k.LB.pairs[k.LB.classes.representative[rep]];
        k.latching.image.push_back(B.apply(k.LB.index[s], b));
      } else {
        k.latching.image.push_back(m_.component(x)[rep - nlb]);
      }
    }

    std::map<std::pair<int, int>, int> where;
    std::vector<int> image_of(k.MA.size());
    for (int mu = 0; mu < k.MA.size(); ++mu) {
      std::vector<int> pushed;
      for (std::size_t s = 0; s < k.MA.index.size(); ++s)
        pushed.push_back(m_.component(cat.tgt(k.MA.index[s]))[k.MA.families[mu][s]]);
      image_of[mu] = k.MB.find(pushed);
    }
    std::vector<int> cone_b(B.size(x));
    for (int b = 0; b < B.size(x); ++b) cone_b[b] = k.MB.find(family_at(k.MB, B, b));
    for (int mu = 0; mu < k.MA.size(); ++mu)
      for (int b = 0; b < B.size(x); ++b)
        if (image_of[mu] == cone_b[b]) {
          where.emplace(std::pair{mu, b}, static_cast<int>(k.pullback.size()));
          k.pullback.emplace_back(mu, b);
        }
    k.matching.codomain = static_cast<int>(k.pullback.size());
    for (int a = 0; a < A.size(x); ++a) {
      const int mu = k.MA.find(family_at(k.MA, A, a));
      k.matching.image.push_back(where.at({mu, m_.component(x)[a]}));
    }
    return k;
  }

 private:
  const LowerPart& lower(int delta) {
    auto it = lower_.find(delta);
    if (it == lower_.end()) it = lower_.emplace(delta, lower_part(C_, delta)).first;
    return it->second;
  }
  const std::pair<SetDiagram, SetDiagram>& restricted(int delta) {
    auto it = restricted_.find(delta);
    if (it == restricted_.end()) {
      const LowerPart& low = lower(delta);
      it = restricted_.emplace(delta, std::pair{restrict(m_.source(), low.sub), restrict(m_.target(), low.sub)}).first;
    }
    return it->second;
  }

  const DegreedCategory& C_;
  const DiagramMap& m_;
  SearchBudget budget_;
  std::map<int, LowerPart> lower_;
  std::map<int, std::pair<SetDiagram, SetDiagram>> restricted_;
};

MapClassification classify_with(const DegreedCategory& C, const DiagramMap& m, long long max_search,
                                std::vector<Corner>* corners) {
  CornerBuilder builder(C, m, max_search);
  MapClassification out;
  out.cls = {true, true};
  for (ObjectIndex x = 0; x < C.cat().object_count(); ++x) {
    Corner k = builder.at(x);
    out.cls.is_R = out.cls.is_R && k.matching.surjective();
    out.cls.is_L = out.cls.is_L && k.latching.injective();
    out.relative.push_back({x, k.matching, k.latching});
    if (corners) corners->push_back(std::move(k));
  }
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

}  // namespace

MapClass base_classify(const FinFunction& f) { return {f.injective(), f.surjective()}; }

std::pair<FinFunction, FinFunction> base_factorize(const FinFunction& f) {
  const int n = f.domain();
  FinFunction inclusion{n + f.codomain, {}};
  FinFunction fold{f.codomain, f.image};
  for (int a = 0; a < n; ++a) inclusion.image.push_back(a);
  for (int y = 0; y < f.codomain; ++y) fold.image.push_back(y);
  return {std::move(inclusion), std::move(fold)};
}

MapClassification reedy_classify_map(const DegreedCategory& C, const DiagramMap& m, long long max_search) {
  require_discrete_bistratified(C);
  require_shape(C, m);
  return classify_with(C, m, max_search, nullptr);
}

MapClass reedy_classify_dual(const DegreedCategory& C, const DiagramMap& m, long long max_search) {
  const FinCategory& cat = C.cat();
  const DegreedCategory D = opposite(C);
  if (!(m.shape() == D.cat())) fail(ErrorKind::NotNatural, "the diagram map is not indexed by the opposite category");
  require_discrete_bistratified(C);
  const SetDiagram& A = m.source();
  const SetDiagram& B = m.target();
  const FinCategory& dcat = D.cat();

  MapClass out{true, true};
  for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
    const ObjectIndex xd = dcat.object_index(cat.object_id(x));
    const LowerPart low = lower_part(C, C.degree(x));
    const LowerPart lowd = lower_part(D, C.degree(x));
    const FinCategory& S = *low.sub.cat;
    const SetDiagram A_low = restrict(A, lowd.sub);
    const SetDiagram B_low = restrict(B, lowd.sub);
    const FinCategory& Sd = *lowd.sub.cat;

    // Colimit side: ∫^z C(x, z) × X(z) over the lower part.
    std::vector<std::vector<MorphismIndex>> out_of(S.object_count());
    std::vector<std::vector<std::string>> names(S.object_count());
    for (ObjectIndex z = 0; z < S.object_count(); ++z)
      for (MorphismIndex f : cat.hom(x, low.sub.object_origin[z])) {
        out_of[z].push_back(f);
        names[z].push_back(cat.morphism_id(f));
      }
    auto position = [](const std::vector<MorphismIndex>& v, MorphismIndex f) {
      return static_cast<int>(std::find(v.begin(), v.end(), f) - v.begin());
    };
    std::vector<std::vector<int>> maps(S.morphism_count());
    for (MorphismIndex k : S.morphisms()) {
      const MorphismIndex kc = low.sub.morphism_origin[k];
      for (MorphismIndex f : out_of[S.src(k)]) maps[k].push_back(position(out_of[S.tgt(k)], cat.compose(kc, f)));
    }
    const SetDiagram U(low.sub.cat, names, std::move(maps));
    const Coend TA = weighted_colimit(U, A_low);
    const Coend TB = weighted_colimit(U, B_low);
    auto tb_class = [&](ObjectIndex z, int u, int b) {
      const CoendElement key{z, u, b};
      const auto it = std::lower_bound(TB.elements.begin(), TB.elements.end(), key);
      return TB.classes.class_of[it - TB.elements.begin()];
    };
    const int nb = TB.classes.class_count();
    std::vector<std::pair<int, int>> identify;
    for (int c = 0; c < TA.classes.class_count(); ++c) {
      const CoendElement& e = TA.elements[TA.classes.representative[c]];
      const MorphismIndex fd = dcat.morphism_index(names[e.object][e.weight]);
      const ObjectIndex zd = lowd.sub.object_origin[e.object];
      identify.emplace_back(tb_class(e.object, e.weight, m.component(zd)[e.value]), nb + A.apply(fd, e.value));
    }
    const Quotient po = quotient(nb + A.size(xd), identify);
    std::vector<bool> hit(B.size(xd));
    bool injective = true;
    for (int rep : po.representative) {
      int b;
      if (rep < nb) {
        const CoendElement& e = TB.elements[TB.classes.representative[rep]];
        b = B.apply(dcat.morphism_index(names[e.object][e.weight]), e.value);
      } else {
        b = m.component(xd)[rep - nb];
      }
      injective = injective && !hit[b];
      hit[b] = true;
    }
    out.is_R = out.is_R && injective;

    // Limit side: natural families out of D(x, −) = C(−, x) over the lower part.
    std::vector<std::vector<MorphismIndex>> into(Sd.object_count());
    std::vector<std::vector<std::string>> wnames(Sd.object_count());
    for (ObjectIndex z = 0; z < Sd.object_count(); ++z)
      for (MorphismIndex g : cat.hom(cat.object_index(dcat.object_id(lowd.sub.object_origin[z])), x)) {
        into[z].push_back(g);
        wnames[z].push_back(cat.morphism_id(g));
      }
    std::vector<std::vector<int>> wmaps(Sd.morphism_count());
    for (MorphismIndex k : Sd.morphisms()) {
      const MorphismIndex kc = cat.morphism_index(Sd.morphism_id(k));  // C-direction: tgt → src
      for (MorphismIndex g : into[Sd.src(k)]) wmaps[k].push_back(position(into[Sd.tgt(k)], cat.compose(g, kc)));
    }
    const SetDiagram Wt(lowd.sub.cat, wnames, std::move(wmaps));
    const auto FA = weighted_limit(Wt, A_low, max_search);
    const auto FB = weighted_limit(Wt, B_low, max_search);
    auto find = [](const std::vector<Components>& fs, const Components& f) {
      return static_cast<int>(std::lower_bound(fs.begin(), fs.end(), f) - fs.begin());
    };
    auto cone = [&](const SetDiagram& X, int a) {
      Components f(Sd.object_count());
      for (ObjectIndex z = 0; z < Sd.object_count(); ++z)
        for (const auto& id : wnames[z]) f[z].push_back(X.apply(dcat.morphism_index(id), a));
      return f;
    };
    std::vector<int> pushed(FA.size());
    for (std::size_t i = 0; i < FA.size(); ++i) {
      Components f = FA[i];
      for (ObjectIndex z = 0; z < Sd.object_count(); ++z)
        for (int& v : f[z]) v = m.component(lowd.sub.object_origin[z])[v];
      pushed[i] = find(FB, f);
    }
    std::set<std::pair<int, int>> reached;
    for (int a = 0; a < A.size(xd); ++a) reached.emplace(find(FA, cone(A, a)), m.component(xd)[a]);
    std::size_t pullback = 0;
    for (std::size_t i = 0; i < FA.size(); ++i)
      for (int b = 0; b < B.size(xd); ++b)
        if (pushed[i] == find(FB, cone(B, b))) ++pullback;
    out.is_L = out.is_L && reached.size() == pullback;
  }
  return out;
}

ProjectiveLCheck projective_L_check(const DiagramMap& m) {
  const FinCategory& D = m.shape();
  const SetDiagram& B = m.target();
  ProjectiveLCheck out;
  out.injective = true;
  std::vector<std::vector<bool>> in_image(D.object_count());
  for (ObjectIndex x = 0; x < D.object_count(); ++x) {
    out.injective = out.injective && m.function(x).injective();
    in_image[x].assign(B.size(x), false);
    for (int v : m.component(x)) in_image[x][v] = true;
  }
  if (!out.injective) return out;
  out.complemented = true;
  for (MorphismIndex k : D.morphisms())
    for (int b = 0; b < B.size(D.src(k)); ++b)
      if (!in_image[D.src(k)][b] && in_image[D.tgt(k)][B.apply(k, b)]) out.complemented = false;
  if (!out.complemented) return out;

  std::vector<std::vector<int>> local(D.object_count());
  std::vector<std::vector<std::string>> sets(D.object_count());
  for (ObjectIndex x = 0; x < D.object_count(); ++x) {
    local[x].assign(B.size(x), kNoIndex);
    for (int b = 0; b < B.size(x); ++b)
      if (!in_image[x][b]) {
        local[x][b] = static_cast<int>(sets[x].size());
        sets[x].push_back(B.elements(x)[b]);
      }
  }
  std::vector<std::vector<int>> maps(D.morphism_count());
  for (MorphismIndex k : D.morphisms())
    for (int b = 0; b < B.size(D.src(k)); ++b)
      if (!in_image[D.src(k)][b]) maps[k].push_back(local[D.tgt(k)][B.apply(k, b)]);
  out.decomposition = retract_decomposition(SetDiagram(B.shared_shape(), std::move(sets), std::move(maps)));
  out.holds = out.decomposition.success;
  return out;
}

MapClassification creedy_classify_map(const DegreedCategory& C, const DiagramMap& m, long long max_search) {
  const DegreeAnalysis analysis(C);
  if (auto r = check_bistratified(analysis); !r)
    fail(ErrorKind::NotBistratified, "not bistratified: " + describe(*r.witness, C.cat()));
  require_shape(C, m);
  const FinCategory& cat = C.cat();
  std::vector<Corner> corners;
  MapClassification out = classify_with(C, m, max_search, &corners);
  out.cls.is_L = true;

  std::map<int, std::vector<ObjectIndex>> strata;
  for (ObjectIndex x = 0; x < cat.object_count(); ++x) strata[C.degree(x)].push_back(x);
  for (const auto& [delta, objects] : strata) {
    std::vector<bool> keep(cat.object_count()), basic(cat.morphism_count());
    for (ObjectIndex x : objects) keep[x] = true;
    for (MorphismIndex f : cat.morphisms())
      basic[f] = keep[cat.src(f)] && keep[cat.tgt(f)] && analysis.basic_level(f);
    const auto sub = subcategory(cat, keep, basic);
    if (!sub) fail(ErrorKind::InternalInvariantBroken, "a stratum is not a subcategory");
    const FinCategory& S = *sub->cat;

    // The relative latching objects as a functor on the stratum.
    std::vector<std::vector<std::string>> sets;
    std::vector<std::vector<int>> components;
    for (ObjectIndex x : sub->object_origin) {
      sets.push_back(numbered("c", corners[x].pushout.class_count()));
      components.push_back(corners[x].latching.image);
    }
    std::vector<std::vector<int>> maps(S.morphism_count());
    for (MorphismIndex k : S.morphisms()) {
      const MorphismIndex kc = sub->morphism_origin[k];
      const Corner& from = corners[cat.src(kc)];
      const Corner& to = corners[cat.tgt(kc)];
      const int nlb_from = from.LB.size(), nlb_to = to.LB.size();
      for (int rep : from.pushout.representative) {
        int element;
        if (rep < nlb_from) {
          const auto [s, b] = from.LB.pairs[from.LB.classes.representative[rep]];
          element = to.LB.class_of(cat.compose(kc, from.LB.index[s]), b);
        } else {
          element = nlb_to + m.source().apply(kc, rep - nlb_from);
        }
        maps[k].push_back(to.pushout.class_of[element]);
      }
    }
    SetDiagram P(sub->cat, std::move(sets), std::move(maps));
    SetDiagram Bs = restrict(m.target(), *sub);
    const DiagramMap relative(std::move(P), std::move(Bs), std::move(components));
    if (!projective_L_check(relative).holds) out.cls.is_L = false;
  }
  return out;
}

MapFactorization reedy_factorize_map(const DegreedCategory& C, const DiagramMap& m, long long max_search) {
  require_discrete_bistratified(C);
  require_shape(C, m);
  const FinCategory& cat = C.cat();
  const SetDiagram& A = m.source();
  const SetDiagram& B = m.target();
  const int n = cat.object_count();
  SearchBudget budget(max_search);

  std::vector<std::vector<std::string>> sets(n);
  std::vector<std::vector<int>> maps(cat.morphism_count());
  std::vector<std::vector<int>> left(n), right(n);

  std::map<int, std::vector<ObjectIndex>> by_degree;
  for (ObjectIndex x = 0; x < n; ++x) by_degree[C.degree(x)].push_back(x);

  for (const auto& [delta, objects] : by_degree) {
    const LowerPart low = lower_part(C, delta);
    std::vector<std::vector<std::string>> low_sets;
    for (ObjectIndex z : low.sub.object_origin) low_sets.push_back(sets[z]);
    std::vector<std::vector<int>> low_maps;
    for (MorphismIndex k : low.sub.morphism_origin) low_maps.push_back(maps[k]);
    const SetDiagram E_low(low.sub.cat, std::move(low_sets), std::move(low_maps));
    const SetDiagram A_low = restrict(A, low.sub);
    const SetDiagram B_low = restrict(B, low.sub);

    for (ObjectIndex x : objects) {
      const LatchingObject LE = latching_from_lower(C, x, low, E_low);
      const LatchingObject LA = latching_from_lower(C, x, low, A_low);
      const MatchingObject ME = matching_from_lower(C, x, low, E_low, budget);
      const MatchingObject MB = matching_from_lower(C, x, low, B_low, budget);

      // P = L_xE ⊔_{L_xA} A_x
      const int nle = LE.size();
      std::vector<std::pair<int, int>> identify;
      for (int c = 0; c < LA.size(); ++c) {
        const auto [s, a] = LA.pairs[LA.classes.representative[c]];
        const MorphismIndex f = LA.index[s];
        identify.emplace_back(LE.class_of(f, left[cat.src(f)][a]), nle + A.apply(f, a));
      }
      const Quotient P = quotient(nle + A.size(x), identify);

      // Q = M_xE ×_{M_xB} B_x
      auto family_of_b = [&](int b) {
        std::vector<int> fam;
        for (MorphismIndex f : MB.index) fam.push_back(B.apply(f, b));
        return MB.find(fam);
      };
      std::vector<int> pushed(ME.size());
      for (int mu = 0; mu < ME.size(); ++mu) {
        std::vector<int> fam;
        for (std::size_t s = 0; s < ME.index.size(); ++s) fam.push_back(right[cat.tgt(ME.index[s])][ME.families[mu][s]]);
        pushed[mu] = MB.find(fam);
      }
      std::vector<std::pair<int, int>> Q;
      std::map<std::pair<int, int>, int> q_index;
      for (int mu = 0; mu < ME.size(); ++mu)
        for (int b = 0; b < B.size(x); ++b)
          if (pushed[mu] == family_of_b(b)) {
            q_index.emplace(std::pair{mu, b}, static_cast<int>(Q.size()));
            Q.emplace_back(mu, b);
          }

      // The corner map P → Q on class representatives.
      FinFunction corner{static_cast<int>(Q.size()), {}};
      for (int rep : P.representative) {
        int mu, b;
        if (rep < nle) {
          const auto [s, e] = LE.pairs[LE.classes.representative[rep]];
          const MorphismIndex f = LE.index[s];
          const ObjectIndex z = cat.src(f);
          std::vector<int> fam;
          for (MorphismIndex g : ME.index) {
            const MorphismIndex gf = low.local_morphism[cat.compose(g, f)];
            fam.push_back(E_low.apply(gf, e));
          }
          mu = ME.find(fam);
          b = B.apply(f, right[z][e]);
        } else {
          const int a = rep - nle;
          std::vector<int> fam;
          for (MorphismIndex g : ME.index) fam.push_back(left[cat.tgt(g)][A.apply(g, a)]);
          mu = ME.find(fam);
          b = m.component(x)[a];
        }
        auto it = q_index.find({mu, b});
        if (mu == kNoIndex || it == q_index.end())
          fail(ErrorKind::InternalInvariantBroken, "corner map at '" + cat.object_id(x) + "' leaves the pullback");
        corner.image.push_back(it->second);
      }
      const auto [incl, fold] = base_factorize(corner);

      // Names carry provenance: p[...] for the pushout part, q(...) for the pullback part.
      for (int rep : P.representative) {
        if (rep < nle) {
          const auto [s, e] = LE.pairs[LE.classes.representative[rep]];
          sets[x].push_back("p[" + cat.morphism_id(LE.index[s]) + "," + sets[cat.src(LE.index[s])][e] + "]");
        } else {
          sets[x].push_back("p[" + A.elements(x)[rep - nle] + "]");
        }
      }
      for (const auto& [mu, b] : Q) {
        std::vector<std::string> parts;
        for (std::size_t s = 0; s < ME.index.size(); ++s) parts.push_back(sets[cat.tgt(ME.index[s])][ME.families[mu][s]]);
        sets[x].push_back("q(" + joined(parts) + ";" + B.elements(x)[b] + ")");
      }

      for (int a = 0; a < A.size(x); ++a) left[x].push_back(incl(P.class_of[nle + a]));
      for (int e = 0; e < fold.domain(); ++e) right[x].push_back(Q[fold(e)].second);

      for (std::size_t s = 0; s < ME.index.size(); ++s) {
        auto& out = maps[ME.index[s]];
        for (int e = 0; e < fold.domain(); ++e) out.push_back(ME.families[Q[fold(e)].first][s]);
      }
      for (const MorphismIndex f : LE.index) {
        auto& out = maps[f];
        const ObjectIndex z = cat.src(f);
        for (int e = 0; e < static_cast<int>(sets[z].size()); ++e) out.push_back(incl(P.class_of[LE.class_of(f, e)]));
      }
      maps[cat.identity(x)] = FinFunction::identity(static_cast<int>(sets[x].size())).image;
    }

    // Remaining level morphisms factor through lower degrees.
    for (ObjectIndex x : objects)
      for (ObjectIndex y : objects)
        for (MorphismIndex f : cat.hom(x, y)) {
          if (cat.is_identity(f)) continue;
          const auto fund = fundamental_factorizations(C, f);
          if (fund.empty()) fail(ErrorKind::InternalInvariantBroken, "basic level morphism in a discrete stratum");
          const Factorization& fac = fund.front();
          for (int e = 0; e < static_cast<int>(sets[x].size()); ++e)
            maps[f].push_back(maps[fac.second][maps[fac.first][e]]);
        }
  }

  MapFactorization out{DiagramMap(A, A, identity_map(A).components()), DiagramMap(B, B, identity_map(B).components())};
  try {
    SetDiagram E(A.shared_shape(), std::move(sets), std::move(maps));
    out.left = DiagramMap(A, E, std::move(left));
    out.right = DiagramMap(E, B, std::move(right));
  } catch (const Error& e) {
    fail(ErrorKind::InternalInvariantBroken, std::string("inductive factorization is not functorial: ") + e.what());
  }
  if (compose(out.right, out.left).components() != m.components())
    fail(ErrorKind::InternalInvariantBroken, "factorization does not compose to the original map");
  if (!classify_with(C, out.left, max_search, nullptr).cls.is_L)
    fail(ErrorKind::InternalInvariantBroken, "left factor is not in L");
  if (!classify_with(C, out.right, max_search, nullptr).cls.is_R)
    fail(ErrorKind::InternalInvariantBroken, "right factor is not in R");
  return out;
}

void validate_lifting_problem(const LiftingProblem& p) {
  const bool fits = p.left.source() == p.top.source() && p.right.source() == p.top.target() &&
                    p.left.target() == p.bottom.source() && p.right.target() == p.bottom.target();
  if (!fits) fail(ErrorKind::NotNatural, "the four maps do not form a square");
  if (compose(p.right, p.top).components() != compose(p.bottom, p.left).components())
    fail(ErrorKind::NotNatural, "the square does not commute");
}

std::optional<Components> solve_lifting(const LiftingProblem& p, long long max_search) {
  validate_lifting_problem(p);
  const SetDiagram& B = p.left.target();
  const SetDiagram& X = p.right.source();
  const FinCategory& shape = B.shape();
  // forced[x][b]: the value required by the upper triangle, or kNoIndex.
  std::vector<std::vector<int>> forced(shape.object_count());
  bool consistent = true;
  for (ObjectIndex x = 0; x < shape.object_count(); ++x) {
    forced[x].assign(B.size(x), kNoIndex);
    for (int a = 0; a < p.left.source().size(x); ++a) {
      int& slot = forced[x][p.left.component(x)[a]];
      const int v = p.top.component(x)[a];
      if (slot != kNoIndex && slot != v) consistent = false;
      slot = v;
    }
  }
  if (!consistent) return std::nullopt;

  SearchBudget budget(max_search);
  NaturalSearchOptions opts;
  opts.budget = &budget;
  opts.allowed = [&](ObjectIndex x, int b, int v) {
    return p.right.component(x)[v] == p.bottom.component(x)[b] && (forced[x][b] == kNoIndex || forced[x][b] == v);
  };
  std::optional<Components> found;
  search_natural_maps(B, X, opts, [&](const Components& c) {
    found = c;
    return false;
  });
  return found;
}

std::optional<FinFunction> solve_lifting(const FinFunction& left, const FinFunction& right, const FinFunction& top,
                                         const FinFunction& bottom, long long max_search) {
  CategoryTable t;
  t.objects = {"*"};
  t.morphisms = {{"id", 0, 0}};
  t.identity = {0};
  t.table = {0};
  const auto point = std::make_shared<const FinCategory>(FinCategory::from_table(std::move(t)));
  auto set = [&](int n) { return SetDiagram(point, {numbered("", n)}, {FinFunction::identity(n).image}); };
  const bool typed = left.domain() == top.domain() && left.codomain == bottom.domain() &&
                     right.domain() == top.codomain && right.codomain == bottom.codomain;
  if (!typed) fail(ErrorKind::NotNatural, "the four functions do not form a square");
  const LiftingProblem p{DiagramMap(set(left.domain()), set(left.codomain), {left.image}),
                         DiagramMap(set(right.domain()), set(right.codomain), {right.image}),
                         DiagramMap(set(top.domain()), set(top.codomain), {top.image}),
                         DiagramMap(set(bottom.domain()), set(bottom.codomain), {bottom.image})};
  auto filler = solve_lifting(p, max_search);
  if (!filler) return std::nullopt;
  return FinFunction{right.domain(), (*filler)[0]};
}

void for_each_lifting_problem(const DiagramMap& left, const DiagramMap& right,
                              const std::function<bool(const LiftingProblem&)>& visit, long long max_search) {
  SearchBudget budget(max_search);
  NaturalSearchOptions opts;
  opts.budget = &budget;
  std::vector<Components> tops, bottoms;
  search_natural_maps(left.source(), right.source(), opts, [&](const Components& c) {
    tops.push_back(c);
    return true;
  });
  search_natural_maps(left.target(), right.target(), opts, [&](const Components& c) {
    bottoms.push_back(c);
    return true;
  });
  const FinCategory& shape = left.shape();
  for (const auto& top : tops)
    for (const auto& bottom : bottoms) {
      bool commutes = true;
      for (ObjectIndex x = 0; x < shape.object_count() && commutes; ++x)
        for (int a = 0; a < left.source().size(x) && commutes; ++a)
          commutes = right.component(x)[top[x][a]] == bottom[x][left.component(x)[a]];
      if (!commutes) continue;
      const LiftingProblem p{left, right, DiagramMap(left.source(), right.source(), top),
                             DiagramMap(left.target(), right.target(), bottom)};
      if (!visit(p)) return;
    }
}

}  // namespace reedy
