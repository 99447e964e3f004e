#include "pcone/serialization.hpp"

#include <fstream>

namespace pcone {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(to_string(c));
    return a;
}

json to_json(const HRep& h) {
    json a = json::array();
    for (const auto& hs : h.halfspaces) {
        a.push_back(json{{"normal", to_json(hs.normal)}, {"offset", to_string(hs.offset)}});
    }
    return a;
}

json to_json(const VRep& v) {
    json verts = json::array();
    for (const auto& p : v.vertices) verts.push_back(to_json(p));
    json rays = json::array();
    for (const auto& r : v.rays) rays.push_back(to_json(r));
    return json{{"vertices", verts}, {"rays", rays}};
}

json to_json(const Polyhedron& p) {
    return json{{"dim", p.dim()}, {"hrep", to_json(p.hrep())}, {"vrep", to_json(p.vrep())}};
}

json to_json(const PCElem& k) {
    json j{{"dim", k.dim()}};
    switch (k.kind()) {
        case PCElem::Kind::Empty:
            j["kind"] = "empty";
            break;
        case PCElem::Kind::All:
            j["kind"] = "all";
            break;
        case PCElem::Kind::Cone:
            j["kind"] = "cone";
            j["set"] = to_json(k.set());
            break;
    }
    return j;
}

json to_json(const ConvexCone& c) { return to_json(c.polyhedron()); }

json to_json(const LinMap& g) {
    json rows = json::array();
    for (const auto& row : g.entries()) rows.push_back(to_json(row));
    return rows;
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a rational string, got: " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a vector (array of rational strings)");
    Vector v;
    v.reserve(j.size());
    for (const auto& c : j) v.push_back(rational_from_json(c));
    return v;
}

namespace {

int dim_from_json(const json& j) {
    if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
        throw ParseError("missing integer field \"dim\"");
    }
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw ParseError("\"dim\" must be at least 1");
    return dim;
}

HRep hrep_from_json(const json& j, int dim) {
    if (!j.is_array()) throw ParseError("\"hrep\" must be an array of halfspaces");
    HRep h;
    h.dim = dim;
    for (const auto& e : j) {
        if (!e.contains("normal") || !e.contains("offset")) {
            throw ParseError("halfspace needs \"normal\" and \"offset\"");
        }
        h.halfspaces.push_back({vector_from_json(e.at("normal")),
                                rational_from_json(e.at("offset"))});
    }
    return h;
}

VRep vrep_from_json(const json& j, int dim) {
    VRep v;
    v.dim = dim;
    if (j.contains("vertices")) {
        for (const auto& p : j.at("vertices")) v.vertices.push_back(vector_from_json(p));
    }
    if (j.contains("rays")) {
        for (const auto& r : j.at("rays")) v.rays.push_back(vector_from_json(r));
    }
    return v;
}

}  // namespace

Polyhedron polyhedron_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("polyhedron must be a JSON object");
    const int dim = dim_from_json(j);
    const bool has_h = j.contains("hrep");
    const bool has_v = j.contains("vrep");
    if (!has_h && !has_v) throw ParseError("polyhedron needs \"hrep\" or \"vrep\"");
    try {
        if (has_h && has_v) {
            return Polyhedron::from_both(hrep_from_json(j.at("hrep"), dim),
                                         vrep_from_json(j.at("vrep"), dim));
        }
        if (has_h) return Polyhedron::from_hrep(hrep_from_json(j.at("hrep"), dim));
        return Polyhedron::from_vrep(vrep_from_json(j.at("vrep"), dim));
    } catch (const ConsistencyError& e) {
        throw ParseError(std::string("inconsistent representations: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

PCElem pcelem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("PCElem needs a \"kind\" field");
    const int dim = dim_from_json(j);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return PCElem::empty(dim);
    if (kind == "all") return PCElem::all(dim);
    if (kind != "cone") throw ParseError("unknown kind: \"" + kind + "\"");
    if (!j.contains("set")) throw ParseError("cone element needs a \"set\" field");
    Polyhedron p = polyhedron_from_json(j.at("set"));
    if (p.dim() != dim) throw ParseError("\"set\" dimension differs from \"dim\"");
    try {
        return PCElem::cone(std::move(p));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

PCElem pcelem_or_set_from_json(const json& j) {
    if (j.is_object() && j.contains("kind")) return pcelem_from_json(j);
    try {
        return PCElem::cone(polyhedron_from_json(j));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ConvexCone convex_cone_from_json(const json& j) {
    try {
        return ConvexCone::from_polyhedron(polyhedron_from_json(j));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

LinMap linmap_from_json(const json& j) {
    const json& rows = j.is_object() && j.contains("entries") ? j.at("entries") : j;
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be an array of rows");
    Matrix m;
    for (const auto& row : rows) m.push_back(vector_from_json(row));
    try {
        return LinMap(std::move(m));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace pcone
