#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reedy/error.hpp"

namespace reedy {

using ObjectIndex = int;
using MorphismIndex = int;
inline constexpr int kNoIndex = -1;

struct MorphismRecord {
  std::string id;
  ObjectIndex src = kNoIndex;
  ObjectIndex tgt = kNoIndex;
  bool operator==(const MorphismRecord&) const = default;
};

// Index-level description of a category: objects, typed morphisms, the
// identity of each object and a row-major composition table where
// table[g * M + f] holds g∘f (or kNoIndex when the pair is not composable).
struct CategoryTable {
  std::vector<std::string> objects;
  std::vector<MorphismRecord> morphisms;
  std::vector<MorphismIndex> identity;
  std::vector<MorphismIndex> table;
};

// String-level description as read from a file; nothing is trusted yet.
struct CategoryPresentation {
  struct Object {
    std::string id;
    std::optional<long long> degree;
  };
  struct Arrow {
    std::string id, src, tgt;
  };
  struct Composite {
    std::string g, f, composite;
  };
  std::vector<Object> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<Composite> composition;
};

// An immutable, validated finite category. Objects are kept sorted by id and
// morphisms by (src id, tgt id, id), so index order is the canonical order
// used by every traversal and by every emitted sequence.
class FinCategory {
 public:
  FinCategory() = default;

  // Validates the table (unit laws, associativity, totality, typing) and
  // canonicalizes the order. Throws ValidationError listing every violation.
  static FinCategory from_table(CategoryTable table);

  [[nodiscard]] int object_count() const noexcept { return static_cast<int>(objects_.size()); }
  [[nodiscard]] int morphism_count() const noexcept { return static_cast<int>(morphisms_.size()); }
  [[nodiscard]] const std::string& object_id(ObjectIndex x) const { return objects_[x]; }
  [[nodiscard]] const std::string& morphism_id(MorphismIndex f) const { return morphisms_[f].id; }
  [[nodiscard]] const MorphismRecord& morphism(MorphismIndex f) const { return morphisms_[f]; }
  [[nodiscard]] ObjectIndex src(MorphismIndex f) const { return morphisms_[f].src; }
  [[nodiscard]] ObjectIndex tgt(MorphismIndex f) const { return morphisms_[f].tgt; }
  [[nodiscard]] MorphismIndex identity(ObjectIndex x) const { return identity_[x]; }
  [[nodiscard]] bool is_identity(MorphismIndex f) const { return identity_[src(f)] == f; }
  [[nodiscard]] bool composable(MorphismIndex g, MorphismIndex f) const { return tgt(f) == src(g); }

  // g∘f; the pair must be composable.
  [[nodiscard]] MorphismIndex compose(MorphismIndex g, MorphismIndex f) const {
    return table_[static_cast<std::size_t>(g) * morphisms_.size() + f];
  }

  [[nodiscard]] std::span<const MorphismIndex> hom(ObjectIndex x, ObjectIndex y) const;
  [[nodiscard]] std::span<const MorphismIndex> morphisms() const { return all_; }

  [[nodiscard]] std::optional<ObjectIndex> find_object(std::string_view id) const;
  [[nodiscard]] std::optional<MorphismIndex> find_morphism(std::string_view id) const;
  // Throwing lookups (UnknownObject / UnknownMorphism).
  [[nodiscard]] ObjectIndex object_index(std::string_view id) const;
  [[nodiscard]] MorphismIndex morphism_index(std::string_view id) const;

  [[nodiscard]] std::optional<MorphismIndex> inverse(MorphismIndex f) const;
  [[nodiscard]] bool is_isomorphism(MorphismIndex f) const { return inverse(f).has_value(); }

  [[nodiscard]] CategoryTable table() const;

  bool operator==(const FinCategory& other) const {
    return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
           identity_ == other.identity_ && table_ == other.table_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismRecord> morphisms_;
  std::vector<MorphismIndex> identity_;
  std::vector<MorphismIndex> table_;
  std::vector<MorphismIndex> all_;            // 0..M-1, backing store for hom spans
  std::vector<int> hom_offset_;               // n*n+1 offsets into all_
  std::vector<MorphismIndex> by_name_;        // morphism indices sorted by id
};

// Every violation of the category axioms in `table`, in a deterministic order.
std::vector<Violation> find_violations(const CategoryTable& table);

FinCategory validate_category(const CategoryPresentation& presentation);

class DegreedCategory {
 public:
  DegreedCategory() : cat_(std::make_shared<FinCategory>()) {}
  DegreedCategory(FinCategory cat, std::vector<int> degrees);
  DegreedCategory(std::shared_ptr<const FinCategory> cat, std::vector<int> degrees);

  [[nodiscard]] const FinCategory& cat() const noexcept { return *cat_; }
  [[nodiscard]] const std::shared_ptr<const FinCategory>& shared_cat() const noexcept { return cat_; }
  [[nodiscard]] int degree(ObjectIndex x) const { return degrees_[x]; }
  [[nodiscard]] std::span<const int> degrees() const noexcept { return degrees_; }
  [[nodiscard]] int src_degree(MorphismIndex f) const { return degrees_[cat_->src(f)]; }
  [[nodiscard]] int tgt_degree(MorphismIndex f) const { return degrees_[cat_->tgt(f)]; }
  [[nodiscard]] bool is_level(MorphismIndex f) const { return src_degree(f) == tgt_degree(f); }
  [[nodiscard]] int max_degree() const;  // -1 when empty

  bool operator==(const DegreedCategory& other) const {
    return degrees_ == other.degrees_ && *cat_ == *other.cat_;
  }

 private:
  std::shared_ptr<const FinCategory> cat_;
  std::vector<int> degrees_;
};

DegreedCategory validate_degreed_category(const CategoryPresentation& presentation);
CategoryPresentation to_presentation(const DegreedCategory& C);

// Builds a degreed category from explicitly named morphisms. Composites with
// identities are filled in automatically; every other composable pair must be
// supplied through composite().
class CategoryBuilder {
 public:
  // The identity is named `identity_id`, or "id_<id>" when that is empty.
  CategoryBuilder& object(std::string id, int degree, std::string identity_id = {});
  CategoryBuilder& arrow(std::string id, std::string src, std::string tgt);
  // Records g∘f = gf.
  CategoryBuilder& composite(std::string g, std::string f, std::string gf);
  [[nodiscard]] DegreedCategory build() const;

 private:
  CategoryPresentation p_;
};

FinCategory opposite(const FinCategory& C);
DegreedCategory opposite(const DegreedCategory& C);

// Full subcategory on the objects of degree < max_degree.
DegreedCategory full_subcategory(const DegreedCategory& C, int max_degree);

// Subcategory on the chosen objects and morphisms. The selection must contain
// the identities of the chosen objects and be closed under composition.
// Returns the subcategory together with the old index of every new morphism.
struct Subcategory {
  std::shared_ptr<const FinCategory> cat;
  std::vector<ObjectIndex> object_origin;
  std::vector<MorphismIndex> morphism_origin;
};
std::optional<Subcategory> subcategory(const FinCategory& C, const std::vector<bool>& objects,
                                       const std::vector<bool>& morphisms);

}  // namespace reedy
