#pragma once

#include "pcone/pseudocone.hpp"

#include <json.hpp>

#include <string>

namespace pcone {

// JSON wire format. All numbers travel as exact rational strings ("p/q" or
// "p"); nothing in the interface is floating point.
//
//   Polyhedron: {"dim": n, "hrep": [{"normal": [...], "offset": "p/q"}, ...],
//                "vrep": {"vertices": [[...], ...], "rays": [[...], ...]}}
//     At least one representation is required; when both are present they
//     are checked against each other on load.
//   PCElem:     {"dim": n, "kind": "empty"|"all"|"cone", "set": <Polyhedron>}
//   ConvexCone: a Polyhedron whose vrep has the origin as its only vertex.
//   LinMap:     array of rows of rational strings.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const HRep& h);
nlohmann::json to_json(const VRep& v);
nlohmann::json to_json(const Polyhedron& p);
nlohmann::json to_json(const PCElem& k);
nlohmann::json to_json(const ConvexCone& c);
nlohmann::json to_json(const LinMap& g);

Rational rational_from_json(const nlohmann::json& j);
Vector vector_from_json(const nlohmann::json& j);
Polyhedron polyhedron_from_json(const nlohmann::json& j);
PCElem pcelem_from_json(const nlohmann::json& j);
ConvexCone convex_cone_from_json(const nlohmann::json& j);
LinMap linmap_from_json(const nlohmann::json& j);

/// Accepts either a PCElem document or a bare Polyhedron document; a bare
/// set must validate as a pseudo-cone.
PCElem pcelem_or_set_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pcone
