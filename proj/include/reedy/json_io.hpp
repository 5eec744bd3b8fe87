#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "reedy/bigluing.hpp"
#include "reedy/classify.hpp"
#include "reedy/diagram.hpp"
#include "reedy/factorization.hpp"

namespace reedy::io {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON file (MalformedInput on I/O or syntax errors).
Json load_json(const std::filesystem::path& path);

// Category files:
//   {"objects": [{"id", "degree"}], "morphisms": [{"id", "src", "tgt"}],
//    "identities": {object: morphism}, "composition": [[g, f, g∘f]]}
// Unknown fields and wrong types raise MalformedInput; the category axioms are
// then checked by validate_category.
CategoryPresentation parse_category(const Json& j);
DegreedCategory read_category(const Json& j);
Json write_category(const DegreedCategory& C);

// Diagram files: {"shape": path or inline category, "sets": {object: [element]},
// "maps": {morphism: {element: element}}}. Maps of identities may be omitted.
// A string shape is resolved relative to base_dir.
struct ShapedDiagram {
  DegreedCategory shape;
  SetDiagram diagram;
};
ShapedDiagram read_diagram(const Json& j, const std::filesystem::path& base_dir);
Json write_diagram(const SetDiagram& X, const DegreedCategory& shape);

// Diagram-map files: {"shape", "source": {"sets", "maps"}, "target": {"sets", "maps"},
// "components": {object: {element: element}}}.
struct ShapedMap {
  DegreedCategory shape;
  DiagramMap map;
};
ShapedMap read_diagram_map(const Json& j, const std::filesystem::path& base_dir);
Json write_diagram_map(const DiagramMap& m, const DegreedCategory& shape);

// Bigluing data files:
//   {"base": category, "top": category,
//    "U": {"elements": [{"id", "src": C object, "tgt": D object}], "left": [[l, u, l·u]], "right": [[u, k, u·k]]},
//    "W": {"elements": [{"id", "src": D object, "tgt": C object}], "left": [[k, w, k·w]], "right": [[w, l, w·l]]},
//    "alpha": [[w, u, k]]}
// Actions by identities may be omitted. Degrees of "top" are ignored.
AbstractBigluingData read_bigluing(const Json& j, const std::filesystem::path& base_dir);
Json write_bigluing(const AbstractBigluingData& abd);

Json write_witness(const Witness& w, const FinCategory& C);
// {"verdicts": {class: bool}, "witnesses": {class: witness}} in class order;
// only failing classes carry a witness.
Json write_report(const ClassificationReport& report, const FinCategory& C);
Json write_factorization(const Factorization& f, const FinCategory& C);

}  // namespace reedy::io
