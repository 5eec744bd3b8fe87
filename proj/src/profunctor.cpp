#include "reedy/profunctor.hpp"

namespace reedy {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidProfunctor, what); }

}  // namespace

Profunctor::Profunctor(std::shared_ptr<const FinCategory> source, std::shared_ptr<const FinCategory> target,
                       std::vector<std::vector<std::string>> elements,
                       std::vector<std::vector<std::vector<int>>> left,
                       std::vector<std::vector<std::vector<int>>> right)
    : source_(std::move(source)),
      target_(std::move(target)),
      elements_(std::move(elements)),
      left_(std::move(left)),
      right_(std::move(right)) {
  const FinCategory& C = *source_;
  const FinCategory& D = *target_;
  const int nc = C.object_count();
  const int nd = D.object_count();
  if (static_cast<int>(elements_.size()) != nc * nd) bad("element table does not cover every (d, c) pair");
  if (static_cast<int>(left_.size()) != C.morphism_count() || static_cast<int>(right_.size()) != D.morphism_count())
    bad("action tables do not cover every morphism");

  for (MorphismIndex k : C.morphisms()) {
    if (static_cast<int>(left_[k].size()) != nd) bad("left action of '" + C.morphism_id(k) + "' is incomplete");
    for (ObjectIndex d = 0; d < nd; ++d) {
      const auto& fn = left_[k][d];
      if (static_cast<int>(fn.size()) != size(d, C.src(k))) bad("left action of '" + C.morphism_id(k) + "' has the wrong domain");
      for (int v : fn)
        if (v < 0 || v >= size(d, C.tgt(k))) bad("left action of '" + C.morphism_id(k) + "' leaves its codomain");
    }
  }
  for (MorphismIndex l : D.morphisms()) {
    if (static_cast<int>(right_[l].size()) != nc) bad("right action of '" + D.morphism_id(l) + "' is incomplete");
    for (ObjectIndex c = 0; c < nc; ++c) {
      const auto& fn = right_[l][c];
      if (static_cast<int>(fn.size()) != size(D.tgt(l), c)) bad("right action of '" + D.morphism_id(l) + "' has the wrong domain");
      for (int v : fn)
        if (v < 0 || v >= size(D.src(l), c)) bad("right action of '" + D.morphism_id(l) + "' leaves its codomain");
    }
  }

  for (ObjectIndex d = 0; d < nd; ++d)
    for (ObjectIndex c = 0; c < nc; ++c)
      for (int h = 0; h < size(d, c); ++h) {
        if (act_left(C.identity(c), d, h) != h) bad("left action of an identity is not trivial");
        if (act_right(h, c, D.identity(d)) != h) bad("right action of an identity is not trivial");
      }

  for (MorphismIndex k2 : C.morphisms())
    for (MorphismIndex k1 : C.morphisms()) {
      if (!C.composable(k2, k1)) continue;
      const MorphismIndex k = C.compose(k2, k1);
      for (ObjectIndex d = 0; d < nd; ++d)
        for (int h = 0; h < size(d, C.src(k1)); ++h)
          if (act_left(k, d, h) != act_left(k2, d, act_left(k1, d, h)))
            bad("left action does not preserve composition at (" + C.morphism_id(k2) + ", " + C.morphism_id(k1) + ")");
    }
  for (MorphismIndex l2 : D.morphisms())
    for (MorphismIndex l1 : D.morphisms()) {
      if (!D.composable(l2, l1)) continue;
      const MorphismIndex l = D.compose(l2, l1);  // l1: d″ → d′, l2: d′ → d
      for (ObjectIndex c = 0; c < nc; ++c)
        for (int h = 0; h < size(D.tgt(l2), c); ++h)
          if (act_right(h, c, l) != act_right(act_right(h, c, l2), c, l1))
            bad("right action does not preserve composition at (" + D.morphism_id(l2) + ", " + D.morphism_id(l1) + ")");
    }

  for (MorphismIndex k : C.morphisms())
    for (MorphismIndex l : D.morphisms())
      for (int h = 0; h < size(D.tgt(l), C.src(k)); ++h) {
        const int a = act_right(act_left(k, D.tgt(l), h), C.tgt(k), l);
        const int b = act_left(k, D.src(l), act_right(h, C.src(k), l));
        if (a != b) bad("actions do not commute at (" + C.morphism_id(k) + ", " + D.morphism_id(l) + ")");
      }
}

}  // namespace reedy
