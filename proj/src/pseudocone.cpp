#include "pcone/pseudocone.hpp"

#include <algorithm>
#include <utility>

namespace pcone {

ConvexCone::ConvexCone(int dim, std::vector<Vector> generators)
    : poly_(Polyhedron::from_vrep([&] {
          VRep v;
          v.dim = dim;
          v.vertices.push_back(zero_vector(dim));
          for (auto& g : generators) {
              if (!is_zero(g)) v.rays.push_back(std::move(g));
          }
          return v;
      }())) {}

ConvexCone ConvexCone::from_polyhedron(const Polyhedron& p) {
    std::vector<Vector> gens = p.effective_vertices();
    gens.insert(gens.end(), p.vrep().rays.begin(), p.vrep().rays.end());
    ConvexCone c(p.dim(), std::move(gens));
    if (!equal(c.polyhedron(), p)) {
        throw std::invalid_argument("not a cone: set differs from the hull of its directions");
    }
    return c;
}

bool ConvexCone::is_pointed() const {
    std::vector<Vector> negated;
    for (const auto& g : generators()) negated.push_back(negate(g));
    const ConvexCone minus(dim(), std::move(negated));
    return intersect(poly_, minus.polyhedron()).dimension() <= 0;
}

ConvexCone polar_cone(const ConvexCone& c) {
    return ConvexCone::from_polyhedron(c.polyhedron().polar_cone_form());
}

PCElem PCElem::empty(int dim) { return PCElem(dim, Kind::Empty); }
PCElem PCElem::all(int dim) { return PCElem(dim, Kind::All); }

PCElem PCElem::cone(Polyhedron p) {
    ValidationResult r = validate(p);
    if (auto* v = std::get_if<Violation>(&r)) {
        throw std::invalid_argument("not a pseudo-cone: " + v->to_string());
    }
    return std::get<PCElem>(std::move(r));
}

PCElem PCElem::cone_unchecked(Polyhedron p) {
    PCElem e(p.dim(), Kind::Cone);
    e.set_ = std::move(p);
    return e;
}

const Polyhedron& PCElem::set() const {
    if (!set_) throw std::logic_error("PCElem::set: not a Cone element");
    return *set_;
}

std::string Violation::to_string() const {
    switch (reason) {
        case Reason::EmptySet:
            return "the set is empty";
        case Reason::ContainsOrigin:
            return "contains the origin " + pcone::to_string(witness);
        case Reason::EscapesRecession:
            return "not closed under scaling: " + pcone::to_string(witness) +
                   " is in the set but " + pcone::to_string(escape_scale) +
                   " times it is not";
    }
    return "unknown violation";
}

ValidationResult validate(const Polyhedron& p) {
    if (p.is_empty()) return Violation{Violation::Reason::EmptySet, {}, Rational(0)};
    const Vector origin = zero_vector(p.dim());
    if (p.contains_point(origin)) {
        return Violation{Violation::Reason::ContainsOrigin, origin, Rational(0)};
    }
    // K is a pseudo-cone iff K lies inside its own recession cone; the
    // recession cone contains the rays by construction, so only vertices
    // can stray.
    const Polyhedron rec = p.recession();
    for (const auto& v : p.effective_vertices()) {
        if (rec.contains_point(v)) continue;
        // Exact escape scale: sup{lambda : lambda*v in K} plus one.
        Rational sup_scale(-1);  // -1 marks "unbounded"
        bool bounded = false;
        for (const auto& hs : p.hrep().halfspaces) {
            const Rational a = dot(hs.normal, v);
            if (a > 0) {
                const Rational bound = hs.offset / a;
                if (!bounded || bound < sup_scale) sup_scale = bound;
                bounded = true;
            }
        }
        Rational escape = bounded ? sup_scale + 1 : Rational(2);
        if (escape < 2) escape = 2;
        return Violation{Violation::Reason::EscapesRecession, v, escape};
    }
    return PCElem::cone_unchecked(p);
}

namespace {

PCElem checked_cone(Polyhedron p, const char* op) {
    ValidationResult r = validate(p);
    if (auto* v = std::get_if<Violation>(&r)) {
        throw KernelInvariantError(std::string(op) + " produced an invalid pseudo-cone: " +
                                   v->to_string());
    }
    return std::get<PCElem>(std::move(r));
}

void check_dims(const PCElem& k, const PCElem& l, const char* op) {
    if (k.dim() != l.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    }
}

}  // namespace

PCElem dual_star(const PCElem& k) {
    switch (k.kind()) {
        case PCElem::Kind::Empty:
            return PCElem::all(k.dim());
        case PCElem::Kind::All:
            return PCElem::empty(k.dim());
        case PCElem::Kind::Cone:
            break;
    }
    Polyhedron d = k.set().star_dual();
    if (d.is_empty()) {
        throw KernelInvariantError("dual of a pseudo-cone came out empty");
    }
    return checked_cone(std::move(d), "dual_star");
}

PCElem meet(const PCElem& k, const PCElem& l) {
    check_dims(k, l, "meet");
    if (k.is_empty() || l.is_empty()) return PCElem::empty(k.dim());
    if (k.is_all()) return l;
    if (l.is_all()) return k;
    Polyhedron m = intersect(k.set(), l.set());
    if (m.is_empty()) return PCElem::empty(k.dim());
    return checked_cone(std::move(m), "meet");
}

PCElem join(const PCElem& k, const PCElem& l) {
    check_dims(k, l, "join");
    if (k.is_all() || l.is_all()) return PCElem::all(k.dim());
    if (k.is_empty()) return l;
    if (l.is_empty()) return k;
    Polyhedron hull = convex_hull_union(k.set(), l.set());
    if (hull.contains_point(zero_vector(k.dim()))) return PCElem::all(k.dim());
    return checked_cone(std::move(hull), "join");
}

ConvexCone closed_positive_hull(const PCElem& k) {
    if (!k.is_cone()) {
        throw std::invalid_argument("closed_positive_hull: needs a Cone element");
    }
    std::vector<Vector> gens = k.set().effective_vertices();
    const auto& rays = k.set().vrep().rays;
    gens.insert(gens.end(), rays.begin(), rays.end());
    return ConvexCone(k.dim(), std::move(gens));
}

ConvexCone recession_cone(const PCElem& k) {
    if (!k.is_cone()) {
        throw std::invalid_argument("recession_cone: needs a Cone element");
    }
    ConvexCone rec(k.dim(), k.set().vrep().rays);
    // For pseudo-cones the recession cone and the closed positive hull are
    // one and the same set; disagreement means the kernel is broken.
    if (!equal(rec.polyhedron(), closed_positive_hull(k).polyhedron())) {
        throw KernelInvariantError("recession cone differs from the closed positive hull");
    }
    return rec;
}

Polyhedron classical_polar(const PCElem& k) {
    if (!k.is_cone()) {
        throw std::invalid_argument("classical_polar: needs a Cone element");
    }
    return k.set().classical_polar();
}

std::string to_string(const SupportValue& s) {
    return s.is_infinite ? "inf" : to_string(s.value);
}

SupportValue support(const PCElem& k, const Vector& u) {
    if (!k.is_cone()) throw std::invalid_argument("support: needs a Cone element");
    if (static_cast<int>(u.size()) != k.dim()) {
        throw std::invalid_argument("support: dimension mismatch");
    }
    for (const auto& r : k.set().vrep().rays) {
        if (dot(u, r) > 0) return SupportValue::infinite();
    }
    const auto verts = k.set().effective_vertices();
    Rational best = dot(u, verts.front());
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const Rational v = dot(u, verts[i]);
        if (v > best) best = v;
    }
    return SupportValue::finite(best);
}

std::optional<Rational> radial(const PCElem& k, const Vector& u) {
    if (!k.is_cone()) throw std::invalid_argument("radial: needs a Cone element");
    if (static_cast<int>(u.size()) != k.dim()) {
        throw std::invalid_argument("radial: dimension mismatch");
    }
    if (is_zero(u)) throw std::invalid_argument("radial: direction must be nonzero");

    // Feasible scales {lambda >= 0 : lambda*u in K} form a closed interval;
    // intersect the one-dimensional conditions lambda*<a,u> <= b.
    Rational lo(0);
    bool has_hi = false;
    Rational hi(0);
    for (const auto& hs : k.set().hrep().halfspaces) {
        const Rational a = dot(hs.normal, u);
        if (a > 0) {
            const Rational bound = hs.offset / a;
            if (!has_hi || bound < hi) hi = bound;
            has_hi = true;
        } else if (a == 0) {
            if (hs.offset < 0) return std::nullopt;
        } else {
            const Rational bound = hs.offset / a;
            if (bound > lo) lo = bound;
        }
    }
    if (has_hi && lo > hi) return std::nullopt;
    return -lo;
}

RadialSupportVerdict radial_support_check(const PCElem& k, const PCElem& dual_of_k,
                                          const Vector& u) {
    RadialSupportVerdict v;
    v.support_of_dual = support(dual_of_k, u);
    v.radial_value = radial(k, u);
    if (v.support_of_dual.is_infinite || v.support_of_dual.value >= 0) {
        v.identity_holds = !v.radial_value.has_value();
    } else {
        v.identity_holds = v.radial_value.has_value() &&
                           *v.radial_value * v.support_of_dual.value == 1;
    }
    return v;
}

RadialSupportVerdict radial_support_check(const PCElem& k, const Vector& u) {
    return radial_support_check(k, dual_star(k), u);
}

PCElem apply_gl(const LinMap& g, const PCElem& k) {
    if (g.dim() != k.dim()) throw std::invalid_argument("apply_gl: dimension mismatch");
    if (!k.is_cone()) return k;
    VRep image;
    image.dim = k.dim();
    for (const auto& v : k.set().vrep().vertices) image.vertices.push_back(g.apply(v));
    for (const auto& r : k.set().vrep().rays) image.rays.push_back(g.apply(r));
    return checked_cone(Polyhedron::from_vrep(std::move(image)), "apply_gl");
}

CCloseVerdict c_close(const ConvexCone& c, const PCElem& k) {
    if (!k.is_cone()) throw std::invalid_argument("c_close: K must be a Cone element");
    if (c.dim() != k.dim()) throw std::invalid_argument("c_close: dimension mismatch");
    if (!c.is_pointed()) throw std::invalid_argument("c_close: C is not pointed");
    if (!c.is_full_dimensional()) {
        throw std::invalid_argument("c_close: C is not full-dimensional");
    }
    if (!contains_set(c.polyhedron(), k.set())) {
        throw std::invalid_argument("c_close: K is not contained in C");
    }

    // C \ K is covered by the pieces of C beyond each constraint of K, and
    // each such piece minus a hyperplane lies inside C \ K. So the volume is
    // finite iff no full-dimensional piece is unbounded, and positive iff
    // some piece is full-dimensional.
    const int n = k.dim();
    CCloseVerdict verdict;
    verdict.finite = true;
    verdict.positive = false;
    for (const auto& hs : k.set().hrep().halfspaces) {
        HRep piece = c.polyhedron().hrep();
        piece.halfspaces.push_back({negate(hs.normal), -hs.offset});
        const Polyhedron part = Polyhedron::from_hrep(std::move(piece));
        const bool full = part.dimension() == n;
        if (full) verdict.positive = true;
        if (full && !part.is_bounded()) verdict.finite = false;
    }
    return verdict;
}

bool pc_leq(const PCElem& k, const PCElem& l) {
    check_dims(k, l, "pc_leq");
    // Unchecked elements may carry a Cone tag on an empty polyhedron.
    const bool k_empty = k.is_empty() || (k.is_cone() && k.set().is_empty());
    const bool l_empty = l.is_empty() || (l.is_cone() && l.set().is_empty());
    if (k_empty || l.is_all()) return true;
    if (k.is_all()) return l.is_all();
    if (l_empty) return false;
    return contains_set(l.set(), k.set());
}

bool pc_equal(const PCElem& k, const PCElem& l) {
    check_dims(k, l, "pc_equal");
    if (k.kind() != l.kind()) {
        // An unchecked element may carry a Cone tag while describing the
        // empty set; fall back to the order relation.
        return pc_leq(k, l) && pc_leq(l, k);
    }
    if (!k.is_cone()) return true;
    return equal(k.set(), l.set());
}

PCElem RaySet::to_pcelem() const {
    if (is_zero(base)) throw std::invalid_argument("RaySet: base must be nonzero");
    VRep v;
    v.dim = static_cast<int>(base.size());
    v.vertices.push_back(base);
    v.rays.push_back(base);
    return PCElem::cone(Polyhedron::from_vrep(std::move(v)));
}

}  // namespace pcone
