// Report output: JSON, DOT, ASCII grids and summary tables.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "silted/homology.hpp"

namespace silted {

using Json = nlohmann::ordered_json;

Json to_json(const Quiver& q);
/// {"I": [shifted vertex labels], "modules": [[dims]], "summands": [...]}.
Json to_json(const Quiver& q, const SiltingObject& t);
Json to_json(const Quiver& q, const TiltingModule& t);
/// Relations as lists of {coeff, path} terms, paths as arrow-id lists.
Json to_json(const BoundQuiverAlgebra& b);
Json to_json(const Quiver& q, const ClassificationRecord& r);
Json to_json(const ArQuiver& ar);
Json to_json(const std::vector<IsoClass>& classes);

/// {"quiver", "count", "objects"}.
Json silting_report(const Quiver& q, const std::vector<SiltingObject>& objects);
/// {"quiver", "records", "classes", "families"}.
Json classification_report(const Quiver& q, const std::vector<ClassificationRecord>& records,
                           const std::vector<IsoClass>& classes);

/// Irreducible maps solid, tau dashed from X to tau X.
std::string to_dot(const ArQuiver& ar, const std::string& name = "ar");
/// Gabriel quiver of b, zero relations and other relations drawn dotted
/// from source to target.
std::string to_dot(const BoundQuiverAlgebra& b, const std::string& name = "algebra");

/// AR quiver as a grid, one line per tau-orbit. With `marked` empty, cells
/// carry the object names; otherwise "•" marks members and "∘" the rest.
std::string to_ascii(const ArQuiver& ar, const std::set<IndecomposableId>& marked = {}, bool use_marks = false);

/// One-line sketch: "2→3 3→1 4→3 | 2·3·1" (zero relations), other
/// relations written out with coefficients.
std::string sketch(const BoundQuiverAlgebra& b);

std::string summary_csv(const std::vector<ClassificationRecord>& records, const std::vector<IsoClass>& classes);
std::string summary_text(const std::vector<ClassificationRecord>& records, const std::vector<IsoClass>& classes);

}  // namespace silted
