#pragma once

// JSON encodings of the library types (nlohmann ADL hooks).

#include <json.hpp>

#include "ssot/analysis.hpp"
#include "ssot/correspondences.hpp"
#include "ssot/oscillating.hpp"
#include "ssot/polyring.hpp"
#include "ssot/shapes.hpp"
#include "ssot/tableaux.hpp"

namespace ssot {

using json = nlohmann::json;

void to_json(json& j, const Box& b);
void from_json(const json& j, Box& b);
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const Composition& c);
void from_json(const json& j, Composition& c);
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);
void to_json(json& j, const SkewTableau& t);
void to_json(json& j, const SsotStep& s);
void from_json(const json& j, SsotStep& s);
void to_json(json& j, const Ssot& s);
void from_json(const json& j, Ssot& s);
void to_json(json& j, const OscillatingTableau& o);
void from_json(const json& j, OscillatingTableau& o);
void to_json(json& j, const TwoRowArray& l);
void from_json(const json& j, TwoRowArray& l);
void to_json(json& j, const SundaramPair& p);
void from_json(const json& j, SundaramPair& p);
void to_json(json& j, const SparsePoly& f);
SparsePoly poly_from_json(const json& j);
json schur_json(const SchurCoefficients& c);

/// Rows of digit strings, one string per box, e.g. [["1","12233"],["2"]].
json display_json(const Ssot& s);
/// Box contents as strings; letters above 9 are comma separated.
std::vector<std::vector<std::string>> display_rows(const Ssot& s);

}  // namespace ssot
