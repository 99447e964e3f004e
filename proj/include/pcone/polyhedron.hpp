#pragma once

#include "pcone/dd.hpp"
#include "pcone/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pcone {

// Closed halfspace {x : <normal, x> <= offset}.
struct Halfspace {
    Vector normal;  // nonzero
    Rational offset;
};

// Intersection of finitely many halfspaces; the empty list is all of R^dim.
struct HRep {
    int dim = 0;
    std::vector<Halfspace> halfspaces;
};

// conv(vertices) + cone(rays). No generators at all denotes the empty set;
// with rays only, the set is cone(rays) and contains the origin.
struct VRep {
    int dim = 0;
    std::vector<Vector> vertices;
    std::vector<Vector> rays;  // nonzero
};

/// Canonical infeasible system {x_1 <= -1, -x_1 <= -1}.
HRep empty_hrep(int dim);

/// Exact facet system of conv(vertices)+cone(rays) by double description on
/// the homogenization. Lower-dimensional pieces come out as paired opposite
/// inequalities; lines as paired opposite rays.
HRep vrep_to_hrep(const VRep& v);

/// Exact generators of the halfspace intersection; an infeasible system
/// yields the empty VRep.
VRep hrep_to_vrep(const HRep& h);

/// Raised when a file supplies both representations and they disagree.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// A closed convex polyhedron carrying both representations. Values are
// immutable after construction; the representation not supplied is derived
// by double description, so predicates on either side are exact.
class Polyhedron {
public:
    static Polyhedron from_hrep(HRep h);
    static Polyhedron from_vrep(VRep v);
    /// Keeps both representations as given; throws ConsistencyError (naming a
    /// violating generator or constraint) unless they describe the same set.
    static Polyhedron from_both(HRep h, VRep v);

    int dim() const { return hrep_.dim; }
    const HRep& hrep() const { return hrep_; }
    const VRep& vrep() const { return vrep_; }

    bool is_empty() const;
    bool contains_point(const Vector& x) const;

    /// Affine dimension of the point set; -1 for the empty set.
    int dimension() const;

    bool is_bounded() const;

    /// cone(rays) with its apex at the origin; requires a nonempty set.
    Polyhedron recession() const;

    /// Same set, generators re-derived (drops non-extreme generators).
    Polyhedron reduce() const;

    // Halfspace systems built from the generators.
    Polyhedron star_dual() const;       // <x,v> <= -1 on vertices, <= 0 on rays
    Polyhedron classical_polar() const; // <x,v> <= 1 on vertices, <= 0 on rays
    Polyhedron polar_cone_form() const; // <x,g> <= 0 on every generator

    /// Vertex list, with the origin standing in when the set is a cone given
    /// by rays alone.
    std::vector<Vector> effective_vertices() const;

private:
    Polyhedron(HRep h, VRep v) : hrep_(std::move(h)), vrep_(std::move(v)) {}

    HRep hrep_;
    VRep vrep_;
};

/// true iff p contains q (every generator of q satisfies p's constraints).
bool contains_set(const Polyhedron& p, const Polyhedron& q);

/// Set equality, insensitive to redundant generators or constraints.
bool equal(const Polyhedron& p, const Polyhedron& q);

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);

/// Closed convex hull of the union, as the polyhedron of the pooled generators.
Polyhedron convex_hull_union(const Polyhedron& p, const Polyhedron& q);

}  // namespace pcone
