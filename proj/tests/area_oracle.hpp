#pragma once

// Test-only oracle for the C-closeness decision in the plane: exact clipped
// areas on boxes of growing radius, fully independent of the piecewise
// boundedness criterion used by the library.

#include "pcone/pseudocone.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pcone::testing {

// Exact area of a bounded planar polyhedron via the shoelace formula on its
// angularly ordered vertices. Degenerate (empty or collinear) inputs give 0.
inline Rational polygon_area(const Polyhedron& p) {
    if (p.dim() != 2) throw std::invalid_argument("polygon_area: planar sets only");
    if (!p.is_bounded()) throw std::invalid_argument("polygon_area: unbounded set");
    if (p.is_empty()) return 0;
    std::vector<Vector> pts = Polyhedron::from_hrep(p.hrep()).vrep().vertices;
    if (pts.size() < 3) return 0;

    Vector centroid = zero_vector(2);
    for (const auto& q : pts) centroid = add(centroid, q);
    centroid = scale(Rational(1, static_cast<int>(pts.size())), centroid);

    auto half = [&](const Vector& q) {
        const Vector d = subtract(q, centroid);
        return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Vector& a, const Vector& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Vector da = subtract(a, centroid), db = subtract(b, centroid);
        return da[0] * db[1] - da[1] * db[0] > 0;
    });

    Rational twice_area = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vector& a = pts[i];
        const Vector& b = pts[(i + 1) % pts.size()];
        twice_area += a[0] * b[1] - b[0] * a[1];
    }
    if (twice_area < 0) twice_area = -twice_area;
    return twice_area / 2;
}

inline Polyhedron clip_box(const Rational& radius) {
    HRep h;
    h.dim = 2;
    h.halfspaces.push_back({{Rational(1), Rational(0)}, radius});
    h.halfspaces.push_back({{Rational(-1), Rational(0)}, radius});
    h.halfspaces.push_back({{Rational(0), Rational(1)}, radius});
    h.halfspaces.push_back({{Rational(0), Rational(-1)}, radius});
    return Polyhedron::from_hrep(h);
}

struct AreaVerdict {
    bool finite = false;
    bool positive = false;
};

// vol(C \ K) restricted to the box of radius R equals
// area(C n box) - area(K n box) since K lies inside C.
inline Rational clipped_difference(const ConvexCone& c, const PCElem& k, const Rational& r) {
    const Polyhedron box = clip_box(r);
    return polygon_area(intersect(c.polyhedron(), box)) -
           polygon_area(intersect(k.set(), box));
}

// Growth test: beyond every vertex of every cut piece the difference either
// stabilizes (finite volume) or keeps strictly growing (infinite volume).
inline AreaVerdict cclose_area_oracle(const ConvexCone& c, const PCElem& k) {
    Rational max_coord = 1;
    auto absorb = [&max_coord](const Polyhedron& p) {
        for (const auto& v : p.vrep().vertices) {
            for (const auto& coord : v) {
                const Rational a = coord < 0 ? -coord : coord;
                if (a > max_coord) max_coord = a;
            }
        }
    };
    absorb(c.polyhedron());
    absorb(k.set());
    for (const auto& hsp : k.set().hrep().halfspaces) {
        HRep piece = c.polyhedron().hrep();
        piece.halfspaces.push_back({negate(hsp.normal), -hsp.offset});
        absorb(Polyhedron::from_hrep(piece));
    }

    const Rational r1 = 2 * (max_coord + 1);
    const Rational r2 = 2 * r1;
    const Rational d1 = clipped_difference(c, k, r1);
    const Rational d2 = clipped_difference(c, k, r2);
    return {d1 == d2, d2 > 0};
}

}  // namespace pcone::testing
