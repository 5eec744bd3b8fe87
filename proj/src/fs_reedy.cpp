#include "reedy/fs_reedy.hpp"

#include <algorithm>
#include <numeric>

namespace reedy {

namespace {

Witness fs_witness(std::string clause, std::vector<MorphismIndex> morphisms) {
  Witness w;
  w.clause = std::move(clause);
  w.morphisms = std::move(morphisms);
  return w;
}

bool satisfies(const FinCategory& C, const FunctorialFactorization& ff, const Square& s, MorphismIndex w) {
  const Factorization& a = ff.split[s.f];
  const Factorization& b = ff.split[s.f2];
  return C.src(w) == a.mid && C.tgt(w) == b.mid && C.compose(w, a.first) == C.compose(b.first, s.u) &&
         C.compose(b.second, w) == C.compose(s.v, a.second);
}

}  // namespace

std::vector<Square> commuting_squares(const FinCategory& C) {
  std::vector<Square> out;
  for (MorphismIndex f : C.morphisms())
    for (MorphismIndex f2 : C.morphisms())
      for (MorphismIndex u : C.hom(C.src(f), C.src(f2)))
        for (MorphismIndex v : C.hom(C.tgt(f), C.tgt(f2)))
          if (C.compose(v, f) == C.compose(f2, u)) out.push_back({f, f2, u, v});
  return out;
}

std::optional<std::vector<Factorization>> canonical_split(const FinCategory& C, const std::vector<bool>& up,
                                                          const std::vector<bool>& down) {
  std::vector<Factorization> split;
  for (MorphismIndex f : C.morphisms()) {
    bool found = false;
    for (const auto& fac : all_factorizations(C, f))
      if (down[fac.first] && up[fac.second]) {
        split.push_back(fac);
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return split;
}

std::optional<FunctorialFactorization> derive_functorial_factorization(const FinCategory& C,
                                                                       std::vector<Factorization> split) {
  FunctorialFactorization ff;
  ff.split = std::move(split);
  for (const Square& s : commuting_squares(C)) {
    const auto candidates = C.hom(ff.split[s.f].mid, ff.split[s.f2].mid);
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](MorphismIndex w) { return satisfies(C, ff, s, w); });
    if (it == candidates.end()) return std::nullopt;
    ff.connector.emplace(s, *it);
  }
  return ff;
}

CheckResult validate_functorial_factorization(const DegreedCategory& D, const std::vector<bool>& up,
                                              const std::vector<bool>& down, const FunctorialFactorization& ff) {
  const FinCategory& C = D.cat();
  const auto m = static_cast<std::size_t>(C.morphism_count());
  if (up.size() != m || down.size() != m || ff.split.size() != m)
    return CheckResult::failure(fs_witness("data_size_mismatch", {}));
  for (const auto& [mask, name] : {std::pair{&up, "up_not_subcategory"}, std::pair{&down, "down_not_subcategory"}}) {
    for (ObjectIndex x = 0; x < C.object_count(); ++x)
      if (!(*mask)[C.identity(x)]) return CheckResult::failure(fs_witness(name, {C.identity(x)}));
    for (MorphismIndex f : C.morphisms())
      for (ObjectIndex z = 0; z < C.object_count(); ++z)
        for (MorphismIndex g : C.hom(C.tgt(f), z))
          if ((*mask)[f] && (*mask)[g] && !(*mask)[C.compose(g, f)])
            return CheckResult::failure(fs_witness(name, {f, g, C.compose(g, f)}));
  }
  for (MorphismIndex f : C.morphisms()) {
    if (C.is_identity(f)) continue;
    if (up[f] && D.src_degree(f) >= D.tgt_degree(f)) return CheckResult::failure(fs_witness("up_not_raising", {f}));
    if (down[f] && D.src_degree(f) <= D.tgt_degree(f)) return CheckResult::failure(fs_witness("down_not_lowering", {f}));
  }
  for (MorphismIndex f : C.morphisms()) {
    const Factorization& s = ff.split[f];
    const bool typed = s.first >= 0 && s.first < C.morphism_count() && s.second >= 0 &&
                       s.second < C.morphism_count() && C.src(s.first) == C.src(f) && C.tgt(s.first) == s.mid &&
                       C.src(s.second) == s.mid && C.tgt(s.second) == C.tgt(f);
    if (!typed || C.compose(s.second, s.first) != f) return CheckResult::failure(fs_witness("split_not_a_factorization", {f}));
    if (!down[s.first] || !up[s.second]) return CheckResult::failure(fs_witness("split_not_down_then_up", {f}));
  }

  const auto squares = commuting_squares(C);
  std::vector<std::vector<const Square*>> from(m);
  for (const Square& s : squares) {
    auto it = ff.connector.find(s);
    if (it == ff.connector.end()) return CheckResult::failure(fs_witness("missing_connector", {s.f, s.f2, s.u, s.v}));
    if (it->second < 0 || it->second >= C.morphism_count() || !satisfies(C, ff, s, it->second))
      return CheckResult::failure(fs_witness("connector_does_not_commute", {s.f, s.f2, s.u, s.v}));
    if (s.f == s.f2 && C.is_identity(s.u) && C.is_identity(s.v) && !C.is_identity(it->second))
      return CheckResult::failure(fs_witness("identity_square_not_identity", {s.f}));
    from[s.f].push_back(&s);
  }
  for (const Square& s1 : squares)
    for (const Square* s2 : from[s1.f2]) {
      const Square pasted{s1.f, s2->f2, C.compose(s2->u, s1.u), C.compose(s2->v, s1.v)};
      const MorphismIndex expect = C.compose(ff.connector.at(*s2), ff.connector.at(s1));
      if (ff.connector.at(pasted) != expect)
        return CheckResult::failure(fs_witness("connectors_not_functorial", {s1.f, s1.f2, s2->f2}));
    }
  return CheckResult::ok();
}

FsReduction fs_reduce(const DegreedCategory& D, const std::vector<bool>& up, const std::vector<bool>& down,
                      const FunctorialFactorization& ff) {
  const FinCategory& C = D.cat();
  if (auto r = validate_functorial_factorization(D, up, down, ff); !r)
    fail(ErrorKind::NotFsReedy, "functorial factorization data is invalid: " + describe(*r.witness, C));

  const DegreeAnalysis A(D);
  FsReduction out;
  std::vector<bool> keep(C.object_count());
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    keep[x] = A.basic(C.identity(x));
    if (keep[x]) out.objects.push_back(x);
  }

  std::vector<ObjectIndex> by_degree(C.object_count());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](ObjectIndex a, ObjectIndex b) { return D.degree(a) < D.degree(b); });
  std::vector<std::optional<FsReplacement>> replacement(C.object_count());
  constexpr int kGuard = 1'000'000;
  for (ObjectIndex x : by_degree) {
    if (keep[x]) continue;
    const Factorization start = A.fundamental(C.identity(x)).front();
    MorphismIndex g = start.first;   // x → y
    MorphismIndex h = start.second;  // y → x
    int steps = 0;
    while (true) {
      const MorphismIndex loop = C.compose(g, h);
      if (C.is_identity(loop)) break;
      if (++steps > kGuard) fail(ErrorKind::IterationGuardExceeded, "replacement of '" + C.object_id(x) + "' did not stop");
      const Factorization& s = ff.split[loop];
      g = C.compose(s.first, g);
      h = C.compose(h, s.second);
    }
    const ObjectIndex y = C.tgt(g);
    if (keep[y]) {
      replacement[x] = FsReplacement{x, y, g, h};
    } else {
      if (!replacement[y]) fail(ErrorKind::InternalInvariantBroken, "replacement target has no replacement");
      const FsReplacement& r = *replacement[y];
      replacement[x] = FsReplacement{x, r.target, C.compose(r.to, g), C.compose(h, r.from)};
    }
  }
  out.equivalence = true;
  for (ObjectIndex x = 0; x < C.object_count(); ++x) {
    if (!replacement[x]) continue;
    const FsReplacement& r = *replacement[x];
    out.replacements.push_back(r);
    out.equivalence = out.equivalence && keep[r.target] && down[r.to] && up[r.from] &&
                      C.compose(r.from, r.to) == C.identity(x) && C.compose(r.to, r.from) == C.identity(r.target);
  }

  std::vector<bool> morphisms(C.morphism_count());
  for (MorphismIndex f : C.morphisms()) morphisms[f] = keep[C.src(f)] && keep[C.tgt(f)];
  const auto sub = subcategory(C, keep, morphisms);
  if (!sub) fail(ErrorKind::InternalInvariantBroken, "full subcategory is not closed");
  std::vector<int> degrees;
  for (ObjectIndex x : sub->object_origin) degrees.push_back(D.degree(x));
  out.reduced = DegreedCategory(sub->cat, std::move(degrees));
  out.morphism_origin = sub->morphism_origin;

  const MorphismClasses basic = basic_classes(out.reduced);
  out.reduced_reedy = check_reedy_definitional(out.reduced, basic.up, basic.down);
  const auto rm = static_cast<std::size_t>(out.reduced.cat().morphism_count());
  std::vector<bool> sup_up(rm), sup_down(rm);
  out.basic_within_supplied = true;
  for (std::size_t i = 0; i < rm; ++i) {
    const MorphismIndex o = out.morphism_origin[i];
    sup_up[i] = up[o];
    sup_down[i] = down[o];
    if ((basic.up[i] && !up[o]) || (basic.down[i] && !down[o])) out.basic_within_supplied = false;
  }
  out.supplied_definitional = check_reedy_definitional(out.reduced, sup_up, sup_down);
  return out;
}

}  // namespace reedy
