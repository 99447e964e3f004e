#include "pcone/polyhedron.hpp"

#include <algorithm>
#include <utility>

namespace pcone {

using detail::IntVec;

HRep empty_hrep(int dim) {
    HRep h;
    h.dim = dim;
    h.halfspaces.push_back({unit_vector(dim, 0), Rational(-1)});
    h.halfspaces.push_back({negate(unit_vector(dim, 0)), Rational(-1)});
    return h;
}

namespace {

void check_hrep(const HRep& h) {
    if (h.dim < 1) throw std::invalid_argument("HRep: dimension must be >= 1");
    for (const auto& hs : h.halfspaces) {
        if (static_cast<int>(hs.normal.size()) != h.dim) {
            throw std::invalid_argument("HRep: normal dimension mismatch");
        }
        if (is_zero(hs.normal)) throw std::invalid_argument("HRep: zero normal");
    }
}

void check_vrep(const VRep& v) {
    if (v.dim < 1) throw std::invalid_argument("VRep: dimension must be >= 1");
    for (const auto& p : v.vertices) {
        if (static_cast<int>(p.size()) != v.dim) {
            throw std::invalid_argument("VRep: vertex dimension mismatch");
        }
    }
    for (const auto& r : v.rays) {
        if (static_cast<int>(r.size()) != v.dim) {
            throw std::invalid_argument("VRep: ray dimension mismatch");
        }
        if (is_zero(r)) throw std::invalid_argument("VRep: zero ray");
    }
}

// Homogenized constraint row over (t, x): <a, x> - b t <= 0.
IntVec homogenize_halfspace(const Halfspace& hs) {
    Vector row;
    row.reserve(hs.normal.size() + 1);
    row.push_back(-hs.offset);
    row.insert(row.end(), hs.normal.begin(), hs.normal.end());
    return detail::integerize(row);
}

// Row over (b, a) forcing <a, p> <= b, respectively <a, r> <= 0.
IntVec generator_row(const Vector& g, bool is_vertex) {
    Vector row;
    row.reserve(g.size() + 1);
    row.push_back(is_vertex ? Rational(-1) : Rational(0));
    row.insert(row.end(), g.begin(), g.end());
    return detail::integerize(row);
}

Vector dehomogenize(const IntVec& v) {
    Vector x(v.size() - 1);
    for (std::size_t i = 1; i < v.size(); ++i) x[i - 1] = Rational(v[i]);
    if (v[0] != 0) {
        const Rational t{v[0]};
        for (auto& c : x) c /= t;
    }
    return x;
}

}  // namespace

VRep hrep_to_vrep(const HRep& h) {
    check_hrep(h);
    std::vector<IntVec> rows;
    rows.reserve(h.halfspaces.size() + 1);
    for (const auto& hs : h.halfspaces) rows.push_back(homogenize_halfspace(hs));
    IntVec t_row(static_cast<std::size_t>(h.dim) + 1, 0);
    t_row[0] = -1;  // t >= 0
    rows.push_back(std::move(t_row));

    const auto cone = detail::polar_generators(rows, h.dim + 1);

    VRep v;
    v.dim = h.dim;
    std::vector<Vector> rays;
    for (const auto& r : cone.rays) {
        if (r[0] > 0) {
            v.vertices.push_back(dehomogenize(r));
        } else {
            rays.push_back(dehomogenize(r));
        }
    }
    for (const auto& l : cone.lines) {
        // Lines lie in every constraint's kernel, so their t part is zero.
        rays.push_back(dehomogenize(l));
        rays.push_back(negate(rays.back()));
    }
    if (v.vertices.empty()) return VRep{h.dim, {}, {}};  // infeasible
    v.rays = std::move(rays);
    return v;
}

HRep vrep_to_hrep(const VRep& v) {
    check_vrep(v);
    if (v.vertices.empty() && v.rays.empty()) return empty_hrep(v.dim);

    std::vector<IntVec> rows;
    if (v.vertices.empty()) {
        rows.push_back(generator_row(zero_vector(v.dim), true));  // cone(rays) contains o
    }
    for (const auto& p : v.vertices) rows.push_back(generator_row(p, true));
    for (const auto& r : v.rays) rows.push_back(generator_row(r, false));

    const auto cone = detail::polar_generators(rows, v.dim + 1);

    HRep h;
    h.dim = v.dim;
    auto emit = [&h](const IntVec& g, bool with_opposite) {
        Vector normal(g.size() - 1);
        for (std::size_t i = 1; i < g.size(); ++i) normal[i - 1] = Rational(g[i]);
        if (is_zero(normal)) return;  // 0 <= b with b >= 0: vacuous
        h.halfspaces.push_back({normal, Rational(g[0])});
        if (with_opposite) {
            h.halfspaces.push_back({negate(normal), Rational(-g[0])});
        }
    };
    for (const auto& g : cone.rays) emit(g, false);
    for (const auto& g : cone.lines) emit(g, true);
    return h;
}

Polyhedron Polyhedron::from_hrep(HRep h) {
    check_hrep(h);
    VRep v = hrep_to_vrep(h);
    return Polyhedron(std::move(h), std::move(v));
}

Polyhedron Polyhedron::from_vrep(VRep v) {
    check_vrep(v);
    HRep h = vrep_to_hrep(v);
    return Polyhedron(std::move(h), std::move(v));
}

Polyhedron Polyhedron::from_both(HRep h, VRep v) {
    if (h.dim != v.dim) throw ConsistencyError("representations have different dimensions");
    Polyhedron from_h = from_hrep(h);
    Polyhedron from_v = from_vrep(v);

    // Supplied generators must satisfy the supplied constraints...
    for (const auto& p : from_v.effective_vertices()) {
        for (const auto& hs : h.halfspaces) {
            if (dot(hs.normal, p) > hs.offset) {
                throw ConsistencyError("vertex " + to_string(p) + " violates halfspace <" +
                                       to_string(hs.normal) + ",x> <= " + to_string(hs.offset));
            }
        }
    }
    for (const auto& r : v.rays) {
        for (const auto& hs : h.halfspaces) {
            if (dot(hs.normal, r) > 0) {
                throw ConsistencyError("ray " + to_string(r) + " violates halfspace <" +
                                       to_string(hs.normal) + ",x> <= " + to_string(hs.offset));
            }
        }
    }
    // ...and the constraint side must not allow anything the generators miss.
    if (!contains_set(from_v, from_h)) {
        for (const auto& p : from_h.effective_vertices()) {
            if (!from_v.contains_point(p)) {
                throw ConsistencyError("constraint system admits point " + to_string(p) +
                                       " outside the generator hull");
            }
        }
        throw ConsistencyError("constraint system is strictly larger than the generator hull");
    }
    if (from_h.is_empty() != from_v.is_empty()) {
        throw ConsistencyError("one representation is empty and the other is not");
    }
    return Polyhedron(std::move(h), std::move(v));
}

bool Polyhedron::is_empty() const { return vrep_.vertices.empty() && vrep_.rays.empty(); }

bool Polyhedron::contains_point(const Vector& x) const {
    if (static_cast<int>(x.size()) != dim()) {
        throw std::invalid_argument("contains_point: dimension mismatch");
    }
    for (const auto& hs : hrep_.halfspaces) {
        if (dot(hs.normal, x) > hs.offset) return false;
    }
    return true;
}

std::vector<Vector> Polyhedron::effective_vertices() const {
    if (vrep_.vertices.empty() && !vrep_.rays.empty()) return {zero_vector(dim())};
    return vrep_.vertices;
}

int Polyhedron::dimension() const {
    if (is_empty()) return -1;
    const auto verts = effective_vertices();
    Matrix rows;
    for (std::size_t i = 1; i < verts.size(); ++i) rows.push_back(subtract(verts[i], verts[0]));
    for (const auto& r : vrep_.rays) rows.push_back(r);
    return rank(rows);
}

bool Polyhedron::is_bounded() const { return vrep_.rays.empty(); }

Polyhedron Polyhedron::recession() const {
    if (is_empty()) throw std::invalid_argument("recession: empty polyhedron");
    return from_vrep(VRep{dim(), {zero_vector(dim())}, vrep_.rays});
}

Polyhedron Polyhedron::reduce() const { return from_hrep(hrep_); }

namespace {

Polyhedron generator_system(const Polyhedron& p, const Rational& vertex_offset,
                            bool skip_zero_vertices) {
    const int n = p.dim();
    if (p.is_empty()) return Polyhedron::from_hrep(HRep{n, {}});  // sup over nothing
    HRep h;
    h.dim = n;
    for (const auto& v : p.effective_vertices()) {
        if (is_zero(v)) {
            if (skip_zero_vertices) continue;
            return Polyhedron::from_hrep(empty_hrep(n));  // 0 <= -1 never holds
        }
        h.halfspaces.push_back({v, vertex_offset});
    }
    for (const auto& r : p.vrep().rays) h.halfspaces.push_back({r, Rational(0)});
    if (h.halfspaces.empty()) return Polyhedron::from_hrep(HRep{n, {}});
    return Polyhedron::from_hrep(h);
}

}  // namespace

Polyhedron Polyhedron::star_dual() const { return generator_system(*this, Rational(-1), false); }

Polyhedron Polyhedron::classical_polar() const { return generator_system(*this, Rational(1), true); }

Polyhedron Polyhedron::polar_cone_form() const {
    const int n = dim();
    if (is_empty()) return Polyhedron::from_hrep(HRep{n, {}});
    HRep h;
    h.dim = n;
    for (const auto& v : effective_vertices()) {
        if (!is_zero(v)) h.halfspaces.push_back({v, Rational(0)});
    }
    for (const auto& r : vrep_.rays) h.halfspaces.push_back({r, Rational(0)});
    if (h.halfspaces.empty()) return Polyhedron::from_hrep(HRep{n, {}});
    return Polyhedron::from_hrep(h);
}

bool contains_set(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("contains_set: dimension mismatch");
    for (const auto& v : q.effective_vertices()) {
        if (!p.contains_point(v)) return false;
    }
    for (const auto& r : q.vrep().rays) {
        for (const auto& hs : p.hrep().halfspaces) {
            if (dot(hs.normal, r) > 0) return false;
        }
    }
    return true;
}

bool equal(const Polyhedron& p, const Polyhedron& q) {
    return contains_set(p, q) && contains_set(q, p);
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    HRep h = p.hrep();
    h.halfspaces.insert(h.halfspaces.end(), q.hrep().halfspaces.begin(),
                        q.hrep().halfspaces.end());
    return Polyhedron::from_hrep(std::move(h));
}

Polyhedron convex_hull_union(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("convex_hull_union: dimension mismatch");
    if (p.is_empty()) return q;
    if (q.is_empty()) return p;
    VRep v;
    v.dim = p.dim();
    v.vertices = p.effective_vertices();
    const auto qv = q.effective_vertices();
    v.vertices.insert(v.vertices.end(), qv.begin(), qv.end());
    v.rays = p.vrep().rays;
    v.rays.insert(v.rays.end(), q.vrep().rays.begin(), q.vrep().rays.end());
    return Polyhedron::from_vrep(std::move(v));
}

}  // namespace pcone
