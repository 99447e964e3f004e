#include "pcone/pseudocone.hpp"

#include <doctest.h>

using namespace pcone;

namespace {

Vector rv(std::initializer_list<Rational> xs) { return Vector(xs); }

Halfspace hs(std::initializer_list<Rational> normal, Rational offset) {
    return {Vector(normal), std::move(offset)};
}

// {x >= 0, y >= 1}
Polyhedron k_set() {
    return Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, 0), hs({0, -1}, -1)}});
}

// {x >= 0, y <= -1}
Polyhedron l_set() {
    return Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, 0), hs({0, 1}, -1)}});
}

// {x + y >= 2, x >= 0, y >= 0}
Polyhedron wedge_set() {
    return Polyhedron::from_hrep(
        HRep{2, {hs({-1, -1}, -2), hs({-1, 0}, 0), hs({0, -1}, 0)}});
}

Polyhedron quadrant() {
    return Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, 0), hs({0, -1}, 0)}});
}

}  // namespace

TEST_CASE("validate accepts the running example") {
    const ValidationResult r = validate(k_set());
    REQUIRE(std::holds_alternative<PCElem>(r));
    CHECK(std::get<PCElem>(r).is_cone());
}

TEST_CASE("validate rejects a slab with an escape witness") {
    // {x >= 0, y >= 1, x <= 5}: scaling escapes through x <= 5
    const Polyhedron p = Polyhedron::from_hrep(
        HRep{2, {hs({-1, 0}, 0), hs({0, -1}, -1), hs({1, 0}, 5)}});
    const ValidationResult r = validate(p);
    REQUIRE(std::holds_alternative<Violation>(r));
    const auto& v = std::get<Violation>(r);
    CHECK(v.reason == Violation::Reason::EscapesRecession);
    CHECK(v.witness == rv({5, 1}));
    CHECK(v.escape_scale == 2);
    CHECK_FALSE(p.contains_point(scale(v.escape_scale, v.witness)));
}

TEST_CASE("validate rejects cones through the origin") {
    const ValidationResult r = validate(quadrant());
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(std::get<Violation>(r).reason == Violation::Reason::ContainsOrigin);
}

TEST_CASE("validate reports the empty set") {
    const ValidationResult r = validate(Polyhedron::from_hrep(empty_hrep(2)));
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(std::get<Violation>(r).reason == Violation::Reason::EmptySet);
}

TEST_CASE("dual of the running example") {
    const PCElem k = PCElem::cone(k_set());
    const PCElem d = dual_star(k);
    REQUIRE(d.is_cone());
    const Polyhedron expected =
        Polyhedron::from_hrep(HRep{2, {hs({1, 0}, 0), hs({0, 1}, -1)}});
    CHECK(equal(d.set(), expected));
}

TEST_CASE("dual swaps empty and all") {
    CHECK(dual_star(PCElem::empty(3)).is_all());
    CHECK(dual_star(PCElem::all(3)).is_empty());
}

TEST_CASE("dual of a ray set is a halfplane") {
    const PCElem xbar = RaySet{rv({0, 1})}.to_pcelem();
    const PCElem d = dual_star(xbar);
    const Polyhedron expected = Polyhedron::from_hrep(HRep{2, {hs({0, 1}, -1)}});
    CHECK(equal(d.set(), expected));
}

TEST_CASE("meet") {
    const PCElem k = PCElem::cone(k_set());
    const PCElem l = PCElem::cone(l_set());
    CHECK(meet(k, l).is_empty());  // y >= 1 against y <= -1
    CHECK(pc_equal(meet(k, PCElem::all(2)), k));

    const PCElem a = PCElem::cone(
        Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, 0), hs({0, -1}, -1)}}));
    const PCElem b = PCElem::cone(
        Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, -1), hs({0, -1}, 0)}}));
    const PCElem expected = PCElem::cone(
        Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, -1), hs({0, -1}, -1)}}));
    CHECK(pc_equal(meet(a, b), expected));

    CHECK_THROWS_AS(meet(k, PCElem::all(3)), std::invalid_argument);
}

TEST_CASE("join") {
    const PCElem k = PCElem::cone(k_set());
    const PCElem l = PCElem::cone(l_set());
    CHECK(join(k, l).is_all());  // the hull picks up the origin
    CHECK(pc_equal(join(k, PCElem::empty(2)), k));

    const PCElem xbar = RaySet{rv({2, 0})}.to_pcelem();
    const PCElem ybar = RaySet{rv({0, 2})}.to_pcelem();
    const PCElem joined = join(xbar, ybar);
    REQUIRE(joined.is_cone());
    CHECK(equal(joined.set(), wedge_set()));
}

TEST_CASE("recession cone") {
    const PCElem k = PCElem::cone(k_set());
    CHECK(equal(recession_cone(k).polyhedron(), quadrant()));

    const PCElem xbar = RaySet{rv({1, 1})}.to_pcelem();
    const Polyhedron diag = Polyhedron::from_vrep(VRep{2, {rv({0, 0})}, {rv({1, 1})}});
    CHECK(equal(recession_cone(xbar).polyhedron(), diag));

    const PCElem w = PCElem::cone(wedge_set());
    CHECK(equal(recession_cone(w).polyhedron(), quadrant()));

    CHECK_THROWS_AS(recession_cone(PCElem::empty(2)), std::invalid_argument);
    CHECK_THROWS_AS(recession_cone(PCElem::all(2)), std::invalid_argument);
}

TEST_CASE("closed positive hull") {
    const PCElem k = PCElem::cone(k_set());
    CHECK(equal(closed_positive_hull(k).polyhedron(), quadrant()));

    const PCElem ybar = RaySet{rv({0, 1})}.to_pcelem();
    const Polyhedron up = Polyhedron::from_vrep(VRep{2, {rv({0, 0})}, {rv({0, 1})}});
    CHECK(equal(closed_positive_hull(ybar).polyhedron(), up));

    const PCElem w = PCElem::cone(wedge_set());
    CHECK(equal(closed_positive_hull(w).polyhedron(), quadrant()));
}

TEST_CASE("polar cone") {
    const ConvexCone quad = ConvexCone::from_polyhedron(quadrant());
    const Polyhedron third = Polyhedron::from_hrep(HRep{2, {hs({1, 0}, 0), hs({0, 1}, 0)}});
    CHECK(equal(polar_cone(quad).polyhedron(), third));
    CHECK(equal(polar_cone(polar_cone(quad)).polyhedron(), quadrant()));

    const ConvexCone trivial(2, {});
    CHECK(polar_cone(trivial).polyhedron().hrep().halfspaces.empty());  // all of R^2

    const ConvexCone up(2, {rv({0, 1})});
    const Polyhedron lower = Polyhedron::from_hrep(HRep{2, {hs({0, 1}, 0)}});
    CHECK(equal(polar_cone(up).polyhedron(), lower));
}

TEST_CASE("classical polar") {
    const PCElem k = PCElem::cone(k_set());
    const Polyhedron third = Polyhedron::from_hrep(HRep{2, {hs({1, 0}, 0), hs({0, 1}, 0)}});
    CHECK(equal(classical_polar(k), third));

    const PCElem l = PCElem::cone(l_set());
    const Polyhedron upper_left =
        Polyhedron::from_hrep(HRep{2, {hs({1, 0}, 0), hs({0, -1}, 0)}});
    CHECK(equal(classical_polar(l), upper_left));

    const PCElem xbar = RaySet{rv({1, 0})}.to_pcelem();
    const Polyhedron left = Polyhedron::from_hrep(HRep{2, {hs({1, 0}, 0)}});
    CHECK(equal(classical_polar(xbar), left));

    // The classical polar contains the origin, so it is not an element of
    // the pseudo-cone lattice.
    CHECK(classical_polar(k).contains_point(rv({0, 0})));
}

TEST_CASE("support") {
    const PCElem w = PCElem::cone(wedge_set());
    const PCElem dual = dual_star(w);  // {u <= -1/2, v <= -1/2}
    CHECK(support(dual, rv({1, 1})) == SupportValue::finite(Rational(-1)));
    CHECK(support(dual, rv({1, -1})).is_infinite);
    CHECK(support(dual, rv({0, 0})) == SupportValue::finite(Rational(0)));
}

TEST_CASE("radial") {
    const PCElem w = PCElem::cone(wedge_set());
    CHECK(radial(w, rv({1, 1})) == Rational(-1));
    CHECK_FALSE(radial(w, rv({1, -1})).has_value());
    CHECK(radial(w, rv({2, 2})) == Rational(-1, 2));  // homogeneity of degree -1
    CHECK_THROWS_AS(radial(w, rv({0, 0})), std::invalid_argument);
}

TEST_CASE("radial-support dichotomy") {
    const PCElem w = PCElem::cone(wedge_set());

    const auto inside = radial_support_check(w, rv({1, 1}));
    CHECK(inside.support_of_dual == SupportValue::finite(Rational(-1)));
    CHECK(inside.radial_value == Rational(-1));
    CHECK(inside.identity_holds);

    const auto outside = radial_support_check(w, rv({1, -1}));
    CHECK(outside.support_of_dual.is_infinite);
    CHECK_FALSE(outside.radial_value.has_value());
    CHECK(outside.identity_holds);

    const auto opposite = radial_support_check(w, rv({-1, -1}));
    CHECK(opposite.support_of_dual.is_infinite);
    CHECK_FALSE(opposite.radial_value.has_value());
    CHECK(opposite.identity_holds);
}

TEST_CASE("gl action") {
    const PCElem k = PCElem::cone(k_set());
    CHECK(pc_equal(apply_gl(LinMap::identity(2), k), k));

    const LinMap swap{Matrix{rv({0, 1}), rv({1, 0})}};
    const PCElem swapped = apply_gl(swap, k);
    const Polyhedron expected =
        Polyhedron::from_hrep(HRep{2, {hs({0, -1}, 0), hs({-1, 0}, -1)}});
    CHECK(equal(swapped.set(), expected));

    const LinMap stretch{Matrix{rv({2, 0}), rv({0, 1})}};
    const PCElem xbar = RaySet{rv({1, 1})}.to_pcelem();
    CHECK(pc_equal(apply_gl(stretch, xbar), RaySet{rv({2, 1})}.to_pcelem()));
}

TEST_CASE("c-closeness") {
    const ConvexCone c = ConvexCone::from_polyhedron(quadrant());

    const PCElem w = PCElem::cone(wedge_set());
    const CCloseVerdict yes = c_close(c, w);
    CHECK(yes.c_close());  // the cut-off triangle is bounded and fat

    // {x >= 1, y >= 1}: the piece below x = 1 is an unbounded strip.
    const PCElem corner = PCElem::cone(
        Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, -1), hs({0, -1}, -1)}}));
    const CCloseVerdict no = c_close(c, corner);
    CHECK(no.positive);
    CHECK_FALSE(no.finite);
    CHECK_FALSE(no.c_close());

    // K equal to C itself never validates as a pseudo-cone.
    CHECK_THROWS_AS(PCElem::cone(quadrant()), std::invalid_argument);
}

TEST_CASE("c-closeness preconditions") {
    const PCElem w = PCElem::cone(wedge_set());

    // Not pointed: a halfplane cone.
    const ConvexCone halfplane(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1})});
    CHECK_THROWS_AS(c_close(halfplane, w), std::invalid_argument);

    // Not full-dimensional.
    const ConvexCone flat(2, {rv({1, 0})});
    CHECK_THROWS_AS(c_close(flat, w), std::invalid_argument);

    // K not inside C.
    const ConvexCone c = ConvexCone::from_polyhedron(quadrant());
    const PCElem outside = PCElem::cone(l_set());
    CHECK_THROWS_AS(c_close(c, outside), std::invalid_argument);
}

TEST_CASE("order") {
    const PCElem k = PCElem::cone(k_set());
    CHECK(pc_leq(PCElem::empty(2), k));
    CHECK(pc_leq(k, PCElem::all(2)));

    const PCElem corner = PCElem::cone(
        Polyhedron::from_hrep(HRep{2, {hs({-1, 0}, -1), hs({0, -1}, -1)}}));
    CHECK_FALSE(pc_leq(k, corner));
    CHECK(pc_leq(corner, k));
    CHECK_THROWS_AS(pc_leq(k, PCElem::all(3)), std::invalid_argument);
}

TEST_CASE("cone wrapper checks its input") {
    CHECK_THROWS_AS(ConvexCone::from_polyhedron(k_set()), std::invalid_argument);
    const ConvexCone quad = ConvexCone::from_polyhedron(quadrant());
    CHECK(quad.is_pointed());
    CHECK(quad.is_full_dimensional());
    const ConvexCone halfplane(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1})});
    CHECK_FALSE(halfplane.is_pointed());
}
