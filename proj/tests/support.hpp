#pragma once

#include <string>
#include <vector>

#include "reedy/category.hpp"
#include "reedy/diagram.hpp"

namespace reedy::test {

inline MorphismIndex mor(const FinCategory& C, const std::string& id) { return C.morphism_index(id); }
inline ObjectIndex obj(const FinCategory& C, const std::string& id) { return C.object_index(id); }

inline int hom_size(const FinCategory& C, const std::string& x, const std::string& y) {
  return static_cast<int>(C.hom(C.object_index(x), C.object_index(y)).size());
}

inline std::vector<bool> morphisms_named(const FinCategory& C, const std::vector<std::string>& ids) {
  std::vector<bool> out(C.morphism_count());
  for (const auto& id : ids) out[C.morphism_index(id)] = true;
  return out;
}

// Identities plus the named morphisms.
inline std::vector<bool> class_with_identities(const FinCategory& C, const std::vector<std::string>& ids) {
  auto out = morphisms_named(C, ids);
  for (ObjectIndex x = 0; x < C.object_count(); ++x) out[C.identity(x)] = true;
  return out;
}

// A diagram whose sets are named "0".."n-1" and whose maps are given by image vectors.
inline SetDiagram make_diagram(const DegreedCategory& C, const std::vector<int>& sizes,
                               const std::vector<std::pair<std::string, std::vector<int>>>& maps) {
  const FinCategory& cat = C.cat();
  std::vector<std::vector<std::string>> sets(cat.object_count());
  for (ObjectIndex x = 0; x < cat.object_count(); ++x)
    for (int i = 0; i < sizes[x]; ++i) sets[x].push_back(std::to_string(i));
  std::vector<std::vector<int>> images(cat.morphism_count());
  for (MorphismIndex f : cat.morphisms())
    if (cat.is_identity(f)) images[f] = FinFunction::identity(sizes[cat.src(f)]).image;
  for (const auto& [id, image] : maps) images[cat.morphism_index(id)] = image;
  return SetDiagram(C.shared_cat(), std::move(sets), std::move(images));
}

}  // namespace reedy::test
