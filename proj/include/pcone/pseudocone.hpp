#pragma once

#include "pcone/polyhedron.hpp"

#include <optional>
#include <variant>

namespace pcone {

/// Raised when an operation that is guaranteed to produce a valid element
/// (by the theory behind it) fails to do so: always a kernel bug.
struct KernelInvariantError : std::logic_error {
    explicit KernelInvariantError(const std::string& what) : std::logic_error(what) {}
};

// Polyhedral convex cone with apex at the origin: cone(generators).
class ConvexCone {
public:
    ConvexCone(int dim, std::vector<Vector> generators);

    /// Requires p to be a cone (equal to the positive hull of its own
    /// generators); throws std::invalid_argument otherwise.
    static ConvexCone from_polyhedron(const Polyhedron& p);

    int dim() const { return poly_.dim(); }
    const Polyhedron& polyhedron() const { return poly_; }

    /// Canonical extreme ray directions (lines appear as opposite pairs).
    const std::vector<Vector>& generators() const { return poly_.vrep().rays; }

    bool is_pointed() const;
    bool is_full_dimensional() const { return poly_.dimension() == dim(); }

private:
    explicit ConvexCone(Polyhedron p) : poly_(std::move(p)) {}
    Polyhedron poly_;
};

/// {x : <x,y> <= 0 for all y in c}; an involution on closed convex cones.
ConvexCone polar_cone(const ConvexCone& c);

// Element of the pseudo-cone lattice: the empty set, all of R^n, or a
// closed polyhedral pseudo-cone (origin excluded, closed under scaling
// by lambda >= 1).
class PCElem {
public:
    enum class Kind { Empty, All, Cone };

    static PCElem empty(int dim);
    static PCElem all(int dim);
    /// Validates; throws std::invalid_argument (with the violation text)
    /// unless p is a pseudo-cone.
    static PCElem cone(Polyhedron p);
    /// No validation. Exists so the fault-injection harness can build
    /// deliberately broken elements.
    static PCElem cone_unchecked(Polyhedron p);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_all() const { return kind_ == Kind::All; }
    bool is_cone() const { return kind_ == Kind::Cone; }
    const Polyhedron& set() const;

private:
    PCElem(int dim, Kind kind) : dim_(dim), kind_(kind) {}
    int dim_;
    Kind kind_;
    std::optional<Polyhedron> set_;
};

struct Violation {
    enum class Reason { EmptySet, ContainsOrigin, EscapesRecession };
    Reason reason;
    Vector witness;          // offending point (empty for EmptySet)
    Rational escape_scale;   // lambda with lambda*witness outside, EscapesRecession only
    std::string to_string() const;
};

using ValidationResult = std::variant<PCElem, Violation>;

/// PCElem if p is a closed pseudo-cone (origin excluded and contained in its
/// own recession cone); otherwise the violated condition with a witness.
ValidationResult validate(const Polyhedron& p);

/// {x : <x,y> <= -1 for all y in k}. Empty and R^n swap; on pseudo-cones the
/// result is again a pseudo-cone and applying it twice is the identity.
PCElem dual_star(const PCElem& k);

/// Lattice meet: plain intersection.
PCElem meet(const PCElem& k, const PCElem& l);

/// Lattice join: closed hull of the union, or R^n when that hull picks up
/// the origin.
PCElem join(const PCElem& k, const PCElem& l);

/// rec K = {x : K + x subset K}, computed from the ray generators. Equals
/// the closed positive hull for pseudo-cones; asserted here.
ConvexCone recession_cone(const PCElem& k);

/// cl R+ K: the cone generated by all vertices and rays of K.
ConvexCone closed_positive_hull(const PCElem& k);

/// Classical polar {x : <x,y> <= 1 for all y in K}. Contains the origin, so
/// it is returned as a raw polyhedron, not a lattice element.
Polyhedron classical_polar(const PCElem& k);

struct SupportValue {
    bool is_infinite = false;
    Rational value;  // meaningful only when finite

    static SupportValue infinite() { return {true, Rational(0)}; }
    static SupportValue finite(Rational v) { return {false, std::move(v)}; }
    friend bool operator==(const SupportValue&, const SupportValue&) = default;
};

std::string to_string(const SupportValue& s);

/// sup{<u,x> : x in K}; +infinity when some ray has positive inner product.
SupportValue support(const PCElem& k, const Vector& u);

/// -min{lambda >= 0 : lambda*u in K}; nullopt outside R+ K \ {o}. The value
/// is strictly negative when defined.
std::optional<Rational> radial(const PCElem& k, const Vector& u);

struct RadialSupportVerdict {
    SupportValue support_of_dual;
    std::optional<Rational> radial_value;
    bool identity_holds = false;
};

/// Checks the sign dichotomy: h_{K*}(u) >= 0 or infinite forces rho
/// undefined, and h_{K*}(u) < 0 forces rho_K(u) = 1/h_{K*}(u) exactly.
RadialSupportVerdict radial_support_check(const PCElem& k, const Vector& u);

/// Same check against an already-computed dual (used by the suites, which
/// probe many directions per instance).
RadialSupportVerdict radial_support_check(const PCElem& k, const PCElem& dual_of_k,
                                          const Vector& u);

/// Image under g in GL(n); pseudo-cones map to pseudo-cones.
PCElem apply_gl(const LinMap& g, const PCElem& k);

struct CCloseVerdict {
    bool finite = false;
    bool positive = false;
    bool c_close() const { return finite && positive; }
};

/// Decides whether vol(C \ K) is positive and finite, via the pieces of C
/// cut off by K's constraints: finite iff every piece is bounded or not
/// full-dimensional, positive iff some piece is full-dimensional.
/// Preconditions (pointed full-dimensional C, K a pseudo-cone inside C) are
/// enforced with std::invalid_argument.
CCloseVerdict c_close(const ConvexCone& c, const PCElem& k);

bool pc_equal(const PCElem& k, const PCElem& l);

/// Inclusion order: Empty below everything, All above everything.
bool pc_leq(const PCElem& k, const PCElem& l);

// The half-line [1,+inf){base}: the smallest pseudo-cone through a point.
struct RaySet {
    Vector base;  // nonzero
    PCElem to_pcelem() const;
};

}  // namespace pcone
