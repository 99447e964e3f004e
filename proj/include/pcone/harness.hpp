#pragma once

#include "pcone/pseudocone.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pcone {

// Seeded random-instance generation and the theorem suites. All draws are
// exact rationals with bounded numerator and denominator, so every failure
// replays bit-identically from its seed.

struct GenConfig {
    int dim = 2;
    int num_vertices = 3;
    int num_extra_rays = 2;
    int coordinate_bound = 8;  // |numerator| and denominator of drawn coords
    std::uint64_t seed = 0;
};

struct PropertyResult {
    std::string name;
    int passes = 0;
    int failures = 0;
    std::string first_counterexample;  // empty while the property holds
    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    const PropertyResult* find(const std::string& name) const;
    /// One property per line: "<name> PASS|FAIL <passes>/<trials> seed=<seed>",
    /// followed by an indented counterexample line after each FAIL.
    std::string to_text() const;
};

// Deterministic per-instance randomness (splitmix-derived stream seeds, so
// trial i is the same whether trials run serially or in parallel).
class InstanceRng {
public:
    InstanceRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

    std::uint64_t next();
    int uniform_int(int lo, int hi);  // inclusive
    /// Nonzero integer in [-bound, bound].
    int nonzero_int(int bound);
    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational bounded_rational(int bound, bool nonzero = false);
    Vector bounded_vector(int dim, int bound);

private:
    std::mt19937_64 eng_;
};

/// Pseudo-cone with `num_vertices` vertices in a halfspace {<u,x> >= 1}
/// (u drawn with nonzero coordinates), every vertex repeated as a ray, and
/// `num_extra_rays` extra rays with <u,r> >= 0. Always validates.
PCElem gen_pseudocone(const GenConfig& cfg, std::uint64_t trial = 0);

/// Random g in GL(dim) with entries bounded by the config's coordinate bound.
LinMap gen_glmap(int dim, int bound, InstanceRng& rng);

/// Pointed full-dimensional cone C from dim independent rays together with
/// the cut K = C n {<u,x> >= beta} for u interior to the dual of C; the pair
/// always satisfies the C-closeness test.
std::pair<ConvexCone, PCElem> gen_cclose_instance(const GenConfig& cfg, std::uint64_t trial = 0);

/// Half-integer grid {z/2 : z integer, |z/2| <= 2*bound} in dim coordinates.
/// Throws std::invalid_argument when the grid would exceed `max_points`.
std::vector<Vector> half_step_grid(int dim, int bound, std::size_t max_points = 2000000);

/// For each grid point, compares the generator-quantified dual condition
/// (<x,v> <= -1 on vertices, <x,r> <= 0 on rays) against membership in the
/// computed dual; entries are true where the two agree.
std::vector<bool> sample_oracle_dual(const PCElem& k, const std::vector<Vector>& grid);

enum class RunPolicy { Serial, Parallel };

// The operators a suite exercises, routed through std::function so the
// fault-injection tests can swap in broken variants.
struct KernelOps {
    std::function<PCElem(const PCElem&)> dual;
    std::function<PCElem(const PCElem&, const PCElem&)> meet;
    std::function<PCElem(const PCElem&, const PCElem&)> join;

    static KernelOps standard();
};

enum class KernelMutation {
    DropRayConstraints,     // dual built from vertex constraints only
    PlusOneOffset,          // dual built with <= 1 instead of <= -1
    SkipOriginCheckInJoin,  // join keeps the hull even when it gains the origin
};

KernelOps mutated_ops(KernelMutation m);

/// Involution, order reversal, both De Morgan laws, cone swap, the recession
/// identity, GL equivariance, and the radial-support dichotomy, on seeded
/// random instances. Exact pass required everywhere.
SuiteReport run_duality_suite(const GenConfig& cfg, int trials,
                              RunPolicy policy = RunPolicy::Serial,
                              const KernelOps& ops = KernelOps::standard());

/// tau(K) = g(K*) interchanges meet and join; phi(K) = g(K) preserves both;
/// the constant map is an endomorphism.
SuiteReport run_classification_statement_check(const LinMap& g, const GenConfig& cfg,
                                               int trials,
                                               RunPolicy policy = RunPolicy::Serial);

/// C-closeness over generated instances: c_close holds and the cut validates
/// as a pseudo-cone.
SuiteReport run_cclose_suite(const GenConfig& cfg, int trials,
                             RunPolicy policy = RunPolicy::Serial);

struct PolarCounterexampleReport {
    PCElem k, l;
    Polyhedron k_polar, k_polar_polar;
    Polyhedron l_polar, l_polar_polar;
    PCElem k_star, k_star_star;
    bool polar_fails_on_k = false;      // K oo != K
    bool polar_fails_on_l = false;      // L oo != L
    bool star_involution_holds = false; // K** = K
    bool polar_interchange_fails = false;
    std::string to_text() const;
    bool as_expected() const {
        return polar_fails_on_k && polar_fails_on_l && star_involution_holds &&
               polar_interchange_fails;
    }
};

/// The fixed two-dimensional pair K = {x>=0, y>=1}, L = {x>=0, y<=-1}:
/// the classical polar is not an involution on them and does not interchange
/// meet and join, while the -1 dual does both.
PolarCounterexampleReport demo_polar_counterexample();

}  // namespace pcone
