#pragma once

#include <string>

#include <json.hpp>

#include "bowvar/butterfly.hpp"
#include "bowvar/curves.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/weights.hpp"

namespace bowvar {

// ADL serializers for nlohmann::json.  Indices are 1-based in all JSON
// output; the in-memory structures are 0-based.
void to_json(nlohmann::json& j, const Weight& w);
void to_json(nlohmann::json& j, const KClass& k);
void to_json(nlohmann::json& j, const Bct& b);
void to_json(nlohmann::json& j, const TieDiagram& t);
void to_json(nlohmann::json& j, const Surgery& s);
void to_json(nlohmann::json& j, const Curve& c);
void to_json(nlohmann::json& j, const ClassifiedCurves& c);
void to_json(nlohmann::json& j, const Butterfly& b);
void to_json(nlohmann::json& j, const ButterflyDiagram& b);
void to_json(nlohmann::json& j, const Skeleton& s);

// Graphviz rendering of the 1-skeleton: solid edges between fixed points,
// dashed stubs for rays.
std::string dot_skeleton(const Skeleton& s);

}  // namespace bowvar
