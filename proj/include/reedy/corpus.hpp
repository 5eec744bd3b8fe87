#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reedy/bigluing.hpp"
#include "reedy/category.hpp"
#include "reedy/classify.hpp"
#include "reedy/diagram.hpp"

namespace reedy {

struct CorpusEntry {
  std::string name;
  DegreedCategory category;
  // Only the listed classes are pinned down.
  std::vector<std::pair<StructureClass, bool>> expected;
  std::string provenance;
};

std::vector<std::string> builtin_names();
// UnknownEntry for unregistered names.
CorpusEntry builtin(std::string_view name);
std::vector<CorpusEntry> all_builtins();

// The truncated simplex category on [0], ..., [n] with degree = dimension.
DegreedCategory truncated_simplex(int n);

struct EnumerateOptions {
  // Keep one category per isomorphism class of composition tables instead of
  // every labelled table.
  bool up_to_iso = false;
  // Largest degree value tried; the default is max_objects - 1.
  std::optional<int> max_degree;
};

inline constexpr int kEnumerateMaxObjects = 3;
inline constexpr int kEnumerateMaxMorphisms = 7;

// Every finite category with 1..max_objects objects and at most max_morphisms
// morphisms (identities included), in a deterministic order. Objects are
// named "0", "1", ...; identities "id<x>"; other morphisms "m<x><y>_<j>".
// BoundsExceeded beyond 3 objects or 7 morphisms.
void for_each_small_category(int max_objects, int max_morphisms, bool up_to_iso,
                             const std::function<void(const FinCategory&)>& visit);

// The categories above crossed with every degree assignment.
void enumerate_small(int max_objects, int max_morphisms, const EnumerateOptions& options,
                     const std::function<void(const DegreedCategory&)>& visit);
std::vector<DegreedCategory> enumerate_small(int max_objects, int max_morphisms, const EnumerateOptions& options = {});

// Seeded random functor into sets of size ≤ max_size. Maps are drawn at
// random and completed by constraint propagation; size choices admitting no
// functor are redrawn. Elements are named "0", "1", ...
SetDiagram random_diagram(std::shared_ptr<const FinCategory> shape, std::mt19937_64& rng, int max_size = 3);

// A random natural transformation between two random diagrams, or nullopt
// when `attempts` draws produced no pair admitting one.
std::optional<DiagramMap> random_diagram_map(std::shared_ptr<const FinCategory> shape, std::mt19937_64& rng,
                                             int max_size = 3, int attempts = 64);

// A random profunctor with every H(d, c) of size ≤ max_size, drawn as a
// functor on target^op × source. Element tokens are "<prefix>.<d>.<c>.<i>".
Profunctor random_profunctor(std::shared_ptr<const FinCategory> source, std::shared_ptr<const FinCategory> target,
                             std::mt19937_64& rng, int max_size, std::string_view prefix);

// Random bigluing data of C and D with profunctor sets of size ≤ max_size.
// Each attempt draws U and W and then searches for a valid alpha; nullopt if
// every attempt fails.
std::optional<AbstractBigluingData> random_bigluing_data(const DegreedCategory& C,
                                                         std::shared_ptr<const FinCategory> D, std::mt19937_64& rng,
                                                         int max_size = 2, int attempts = 16);

}  // namespace reedy
