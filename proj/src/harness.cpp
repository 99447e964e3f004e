#include "pcone/harness.hpp"

#include "pcone/serialization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcone {

bool SuiteReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
    for (const auto& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    for (const auto& p : properties) {
        out << p.name << ' ' << (p.passed() ? "PASS" : "FAIL") << ' ' << p.passes << '/'
            << (p.passes + p.failures) << " seed=" << seed << '\n';
        if (!p.passed()) out << "  counterexample: " << p.first_counterexample << '\n';
    }
    return out.str();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
    : eng_(splitmix64(splitmix64(seed ^ 0x853c49e6748fea9bULL) + splitmix64(stream) * 3 +
                      splitmix64(trial) * 7)) {}

std::uint64_t InstanceRng::next() { return eng_(); }

int InstanceRng::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

int InstanceRng::nonzero_int(int bound) {
    int v = 0;
    while (v == 0) v = uniform_int(-bound, bound);
    return v;
}

Rational InstanceRng::bounded_rational(int bound, bool nonzero) {
    const int den = uniform_int(1, bound);
    const int num = nonzero ? nonzero_int(bound) : uniform_int(-bound, bound);
    return Rational(num, den);
}

Vector InstanceRng::bounded_vector(int dim, int bound) {
    Vector v(static_cast<std::size_t>(dim));
    for (auto& c : v) c = bounded_rational(bound);
    return v;
}

namespace {

void check_config(const GenConfig& cfg) {
    if (cfg.dim < 1) throw std::invalid_argument("GenConfig: dim must be >= 1");
    if (cfg.num_vertices < 1) throw std::invalid_argument("GenConfig: need at least one vertex");
    if (cfg.num_extra_rays < 0) throw std::invalid_argument("GenConfig: negative ray count");
    if (cfg.coordinate_bound < 1) throw std::invalid_argument("GenConfig: bound must be >= 1");
}

// Streams keep the draws for different roles independent of each other.
constexpr std::uint64_t kStreamCone = 1;
constexpr std::uint64_t kStreamPartner = 2;
constexpr std::uint64_t kStreamGl = 3;
constexpr std::uint64_t kStreamDirections = 4;
constexpr std::uint64_t kStreamCClose = 5;

PCElem gen_pseudocone_with(const GenConfig& cfg, InstanceRng& rng) {
    const int n = cfg.dim;
    Vector u(static_cast<std::size_t>(n));
    for (auto& c : u) c = rng.bounded_rational(cfg.coordinate_bound, /*nonzero=*/true);

    VRep v;
    v.dim = n;
    for (int i = 0; i < cfg.num_vertices; ++i) {
        Vector p;
        Rational s;
        do {
            p = rng.bounded_vector(n, cfg.coordinate_bound);
            s = dot(u, p);
        } while (s == 0);
        if (s < 0) {
            p = negate(p);
            s = -s;
        }
        if (s < 1) p = scale(Rational(1) / s, p);  // land on <u,x> = 1
        v.vertices.push_back(p);
        v.rays.push_back(std::move(p));  // keeps K inside its recession cone
    }
    for (int i = 0; i < cfg.num_extra_rays; ++i) {
        Vector r;
        do {
            r = rng.bounded_vector(n, cfg.coordinate_bound);
        } while (is_zero(r));
        if (dot(u, r) < 0) r = negate(r);
        v.rays.push_back(std::move(r));
    }

    ValidationResult res = validate(Polyhedron::from_vrep(std::move(v)));
    if (auto* viol = std::get_if<Violation>(&res)) {
        throw KernelInvariantError("gen_pseudocone built an invalid instance: " +
                                   viol->to_string());
    }
    return std::get<PCElem>(std::move(res));
}

}  // namespace

PCElem gen_pseudocone(const GenConfig& cfg, std::uint64_t trial) {
    check_config(cfg);
    InstanceRng rng(cfg.seed, kStreamCone, trial);
    return gen_pseudocone_with(cfg, rng);
}

LinMap gen_glmap(int dim, int bound, InstanceRng& rng) {
    for (;;) {
        Matrix m;
        for (int i = 0; i < dim; ++i) m.push_back(rng.bounded_vector(dim, bound));
        if (determinant(m) != 0) return LinMap(std::move(m));
    }
}

std::pair<ConvexCone, PCElem> gen_cclose_instance(const GenConfig& cfg, std::uint64_t trial) {
    check_config(cfg);
    if (cfg.dim < 2) throw std::invalid_argument("gen_cclose_instance: dim must be >= 2");
    InstanceRng rng(cfg.seed, kStreamCClose, trial);
    const int n = cfg.dim;

    Matrix gens;
    for (;;) {
        gens.clear();
        for (int i = 0; i < n; ++i) {
            Vector g(static_cast<std::size_t>(n));
            for (auto& c : g) c = Rational(rng.uniform_int(-cfg.coordinate_bound,
                                                           cfg.coordinate_bound));
            gens.push_back(std::move(g));
        }
        if (determinant(gens) != 0) break;
    }
    const ConvexCone c(n, gens);

    // u with <u, g_i> > 0 for every generator: strictly inside -C polar,
    // so the piece of C below any level of u is bounded.
    Vector positives(static_cast<std::size_t>(n));
    for (auto& p : positives) p = Rational(rng.uniform_int(1, cfg.coordinate_bound));
    const Vector u = LinMap(gens).inverse().apply(positives);
    const Rational beta(rng.uniform_int(1, cfg.coordinate_bound));

    HRep h = c.polyhedron().hrep();
    h.halfspaces.push_back({negate(u), -beta});
    PCElem k = PCElem::cone(Polyhedron::from_hrep(std::move(h)));

    const CCloseVerdict verdict = c_close(c, k);
    if (!verdict.c_close()) {
        throw KernelInvariantError("gen_cclose_instance built a pair that is not C-close");
    }
    return {c, std::move(k)};
}

std::vector<Vector> half_step_grid(int dim, int bound, std::size_t max_points) {
    const int radius = 4 * bound;  // numerators of z/2 with |z/2| <= 2*bound
    const std::size_t per_axis = 2 * static_cast<std::size_t>(radius) + 1;
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= per_axis;
        if (total > max_points) {
            throw std::invalid_argument("half_step_grid: grid too large at this dimension");
        }
    }
    std::vector<Vector> grid;
    grid.reserve(total);
    std::vector<int> z(static_cast<std::size_t>(dim), -radius);
    for (;;) {
        Vector x(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] =
            Rational(z[static_cast<std::size_t>(i)], 2);
        grid.push_back(std::move(x));
        int i = 0;
        while (i < dim && z[static_cast<std::size_t>(i)] == radius) {
            z[static_cast<std::size_t>(i)] = -radius;
            ++i;
        }
        if (i == dim) break;
        ++z[static_cast<std::size_t>(i)];
    }
    return grid;
}

std::vector<bool> sample_oracle_dual(const PCElem& k, const std::vector<Vector>& grid) {
    if (!k.is_cone()) throw std::invalid_argument("sample_oracle_dual: needs a Cone element");
    const PCElem d = dual_star(k);
    const auto verts = k.set().effective_vertices();
    const auto& rays = k.set().vrep().rays;
    std::vector<bool> agree;
    agree.reserve(grid.size());
    for (const auto& x : grid) {
        bool direct = true;
        for (const auto& v : verts) {
            if (dot(x, v) > -1) {
                direct = false;
                break;
            }
        }
        if (direct) {
            for (const auto& r : rays) {
                if (dot(x, r) > 0) {
                    direct = false;
                    break;
                }
            }
        }
        const bool via_dual = d.is_all() || (d.is_cone() && d.set().contains_point(x));
        agree.push_back(direct == via_dual);
    }
    return agree;
}

KernelOps KernelOps::standard() {
    KernelOps ops;
    ops.dual = [](const PCElem& k) { return dual_star(k); };
    ops.meet = [](const PCElem& k, const PCElem& l) { return pcone::meet(k, l); };
    ops.join = [](const PCElem& k, const PCElem& l) { return pcone::join(k, l); };
    return ops;
}

KernelOps mutated_ops(KernelMutation m) {
    KernelOps ops = KernelOps::standard();
    switch (m) {
        case KernelMutation::DropRayConstraints:
            ops.dual = [](const PCElem& k) {
                if (!k.is_cone()) return dual_star(k);
                HRep h;
                h.dim = k.dim();
                for (const auto& v : k.set().effective_vertices()) {
                    if (!is_zero(v)) h.halfspaces.push_back({v, Rational(-1)});
                }
                Polyhedron d = h.halfspaces.empty()
                                   ? Polyhedron::from_hrep(empty_hrep(k.dim()))
                                   : Polyhedron::from_hrep(std::move(h));
                if (d.is_empty()) return PCElem::empty(k.dim());
                return PCElem::cone_unchecked(std::move(d));
            };
            break;
        case KernelMutation::PlusOneOffset:
            ops.dual = [](const PCElem& k) {
                if (!k.is_cone()) return dual_star(k);
                Polyhedron d = k.set().classical_polar();
                if (d.is_empty()) return PCElem::empty(k.dim());
                return PCElem::cone_unchecked(std::move(d));
            };
            break;
        case KernelMutation::SkipOriginCheckInJoin:
            ops.join = [](const PCElem& k, const PCElem& l) {
                if (k.dim() != l.dim()) throw std::invalid_argument("join: dimension mismatch");
                if (k.is_all() || l.is_all()) return PCElem::all(k.dim());
                if (k.is_empty()) return l;
                if (l.is_empty()) return k;
                return PCElem::cone_unchecked(convex_hull_union(k.set(), l.set()));
            };
            break;
    }
    return ops;
}

namespace {

struct TrialEval {
    std::vector<char> ok;
    std::vector<std::string> note;
};

template <typename Fn>
std::vector<TrialEval> run_trials(int trials, Fn&& eval, RunPolicy policy) {
    std::vector<TrialEval> out(static_cast<std::size_t>(trials));
#ifdef PCONE_HAVE_OPENMP
    if (policy == RunPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = eval(t);
        return out;
    }
#else
    (void)policy;
#endif
    for (int t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = eval(t);
    return out;
}

SuiteReport aggregate(const std::vector<std::string>& names,
                      const std::vector<TrialEval>& evals, std::uint64_t seed) {
    SuiteReport report;
    report.seed = seed;
    for (const auto& name : names) report.properties.push_back(PropertyResult{name});
    for (const auto& e : evals) {
        for (std::size_t p = 0; p < names.size(); ++p) {
            auto& prop = report.properties[p];
            if (e.ok[p]) {
                ++prop.passes;
            } else {
                if (prop.failures == 0) prop.first_counterexample = e.note[p];
                ++prop.failures;
            }
        }
    }
    return report;
}

// Evaluates one property, turning exceptions into failures with a note.
template <typename Fn>
void eval_property(TrialEval& e, std::size_t idx, const std::string& context, Fn&& fn) {
    try {
        const bool ok = fn();
        e.ok[idx] = ok ? 1 : 0;
        if (!ok) e.note[idx] = context;
    } catch (const std::exception& ex) {
        e.ok[idx] = 0;
        e.note[idx] = context + " exception: " + ex.what();
    }
}

std::string describe_pair(std::uint64_t seed, int trial, const PCElem& k, const PCElem& l) {
    std::ostringstream s;
    s << "seed=" << seed << " trial=" << trial << " K=" << to_json(k).dump()
      << " L=" << to_json(l).dump();
    return s.str();
}

std::vector<Vector> radial_directions(const PCElem& k, InstanceRng& rng, int bound, int count) {
    std::vector<Vector> dirs;
    const auto verts = k.set().effective_vertices();
    const auto& rays = k.set().vrep().rays;
    std::vector<Vector> gens = verts;
    gens.insert(gens.end(), rays.begin(), rays.end());

    for (const auto& v : verts) dirs.push_back(v);          // inside R+K
    for (const auto& r : rays) dirs.push_back(r);           // boundary directions
    int spins = 0;
    while (static_cast<int>(dirs.size()) < count && spins++ < 1000) {
        Vector mix = zero_vector(k.dim());
        for (const auto& g : gens) {
            mix = add(mix, scale(Rational(rng.uniform_int(1, bound)), g));
        }
        if (!is_zero(mix)) {
            dirs.push_back(mix);                   // interior mix
            dirs.push_back(negate(mix));           // exterior
        }
        Vector r = rng.bounded_vector(k.dim(), bound);
        if (!is_zero(r)) dirs.push_back(std::move(r));
    }
    while (static_cast<int>(dirs.size()) < count) {
        dirs.push_back(unit_vector(k.dim(), static_cast<int>(dirs.size()) % k.dim()));
    }
    dirs.resize(static_cast<std::size_t>(count));
    return dirs;
}

}  // namespace

SuiteReport run_duality_suite(const GenConfig& cfg, int trials, RunPolicy policy,
                              const KernelOps& ops) {
    check_config(cfg);
    if (trials < 0) throw std::invalid_argument("run_duality_suite: negative trial count");
    const std::vector<std::string> names = {
        "involution",     "order_reversal",     "de_morgan_join", "de_morgan_meet",
        "cone_swap",      "recession_identity", "gl_equivariance", "radial_support",
    };

    auto eval = [&](int trial) {
        TrialEval e;
        e.ok.assign(names.size(), 1);
        e.note.assign(names.size(), "");

        InstanceRng cone_rng(cfg.seed, kStreamCone, static_cast<std::uint64_t>(trial));
        InstanceRng partner_rng(cfg.seed, kStreamPartner, static_cast<std::uint64_t>(trial));
        InstanceRng gl_rng(cfg.seed, kStreamGl, static_cast<std::uint64_t>(trial));
        InstanceRng dir_rng(cfg.seed, kStreamDirections, static_cast<std::uint64_t>(trial));

        const PCElem K = gen_pseudocone_with(cfg, cone_rng);
        const PCElem L = gen_pseudocone_with(cfg, partner_rng);
        const LinMap g = gen_glmap(cfg.dim, cfg.coordinate_bound, gl_rng);
        const std::string ctx = describe_pair(cfg.seed, trial, K, L);

        eval_property(e, 0, ctx, [&] { return pc_equal(ops.dual(ops.dual(K)), K); });
        eval_property(e, 1, ctx, [&] {
            const PCElem M = ops.meet(K, L);
            const PCElem dK = ops.dual(K), dL = ops.dual(L), dM = ops.dual(M);
            return pc_leq(K, L) == pc_leq(dL, dK) && pc_leq(L, K) == pc_leq(dK, dL) &&
                   pc_leq(M, K) == pc_leq(dK, dM) && pc_leq(K, M) == pc_leq(dM, dK) &&
                   pc_leq(M, L) == pc_leq(dL, dM) && pc_leq(L, M) == pc_leq(dM, dL);
        });
        eval_property(e, 2, ctx, [&] {
            return pc_equal(ops.dual(ops.join(K, L)), ops.meet(ops.dual(K), ops.dual(L)));
        });
        eval_property(e, 3, ctx, [&] {
            return pc_equal(ops.dual(ops.meet(K, L)), ops.join(ops.dual(K), ops.dual(L)));
        });
        eval_property(e, 4, ctx, [&] {
            const PCElem dK = ops.dual(K);
            if (!dK.is_cone()) return false;
            return equal(closed_positive_hull(dK).polyhedron(),
                         polar_cone(closed_positive_hull(K)).polyhedron());
        });
        eval_property(e, 5, ctx, [&] {
            return equal(recession_cone(K).polyhedron(),
                         closed_positive_hull(K).polyhedron()) &&
                   equal(recession_cone(L).polyhedron(),
                         closed_positive_hull(L).polyhedron());
        });
        eval_property(e, 6, ctx, [&] {
            return pc_equal(ops.dual(apply_gl(g, K)),
                            apply_gl(g.inverse_transpose(), ops.dual(K)));
        });
        eval_property(e, 7, ctx, [&] {
            const PCElem dK = dual_star(K);
            for (const auto& u :
                 radial_directions(K, dir_rng, cfg.coordinate_bound, 20)) {
                if (!radial_support_check(K, dK, u).identity_holds) return false;
            }
            return true;
        });
        return e;
    };

    return aggregate(names, run_trials(trials, eval, policy), cfg.seed);
}

SuiteReport run_classification_statement_check(const LinMap& g, const GenConfig& cfg,
                                               int trials, RunPolicy policy) {
    check_config(cfg);
    if (g.dim() != cfg.dim) {
        throw std::invalid_argument("run_classification_statement_check: dimension mismatch");
    }
    const std::vector<std::string> names = {
        "tau_interchanges_meet", "tau_interchanges_join",
        "phi_preserves_meet",    "phi_preserves_join",
        "constant_endomorphism",
    };
    auto tau = [&g](const PCElem& k) { return apply_gl(g, dual_star(k)); };
    auto phi = [&g](const PCElem& k) { return apply_gl(g, k); };

    auto eval = [&](int trial) {
        TrialEval e;
        e.ok.assign(names.size(), 1);
        e.note.assign(names.size(), "");
        InstanceRng cone_rng(cfg.seed, kStreamCone, static_cast<std::uint64_t>(trial));
        InstanceRng partner_rng(cfg.seed, kStreamPartner, static_cast<std::uint64_t>(trial));
        const PCElem K = gen_pseudocone_with(cfg, cone_rng);
        const PCElem L = gen_pseudocone_with(cfg, partner_rng);
        const std::string ctx = describe_pair(cfg.seed, trial, K, L);

        eval_property(e, 0, ctx, [&] { return pc_equal(tau(meet(K, L)), join(tau(K), tau(L))); });
        eval_property(e, 1, ctx, [&] { return pc_equal(tau(join(K, L)), meet(tau(K), tau(L))); });
        eval_property(e, 2, ctx, [&] { return pc_equal(phi(meet(K, L)), meet(phi(K), phi(L))); });
        eval_property(e, 3, ctx, [&] { return pc_equal(phi(join(K, L)), join(phi(K), phi(L))); });
        eval_property(e, 4, ctx, [&] {
            // Constant maps preserve both operations trivially.
            return pc_equal(K, meet(K, K)) && pc_equal(K, join(K, K));
        });
        return e;
    };
    return aggregate(names, run_trials(trials, eval, policy), cfg.seed);
}

SuiteReport run_cclose_suite(const GenConfig& cfg, int trials, RunPolicy policy) {
    check_config(cfg);
    const std::vector<std::string> names = {"cclose_holds", "cclose_validates"};
    auto eval = [&](int trial) {
        TrialEval e;
        e.ok.assign(names.size(), 1);
        e.note.assign(names.size(), "");
        std::ostringstream ctx;
        ctx << "seed=" << cfg.seed << " trial=" << trial;
        eval_property(e, 0, ctx.str(), [&] {
            const auto [c, k] = gen_cclose_instance(cfg, static_cast<std::uint64_t>(trial));
            return c_close(c, k).c_close();
        });
        eval_property(e, 1, ctx.str(), [&] {
            const auto [c, k] = gen_cclose_instance(cfg, static_cast<std::uint64_t>(trial));
            return std::holds_alternative<PCElem>(validate(k.set()));
        });
        return e;
    };
    return aggregate(names, run_trials(trials, eval, policy), cfg.seed);
}

PolarCounterexampleReport demo_polar_counterexample() {
    HRep hk;
    hk.dim = 2;
    hk.halfspaces.push_back({{Rational(-1), Rational(0)}, Rational(0)});   // x >= 0
    hk.halfspaces.push_back({{Rational(0), Rational(-1)}, Rational(-1)});  // y >= 1
    HRep hl;
    hl.dim = 2;
    hl.halfspaces.push_back({{Rational(-1), Rational(0)}, Rational(0)});  // x >= 0
    hl.halfspaces.push_back({{Rational(0), Rational(1)}, Rational(-1)});  // y <= -1

    PolarCounterexampleReport r{
        PCElem::cone(Polyhedron::from_hrep(hk)),
        PCElem::cone(Polyhedron::from_hrep(hl)),
        Polyhedron::from_hrep(HRep{2, {}}),  // placeholders, filled below
        Polyhedron::from_hrep(HRep{2, {}}),
        Polyhedron::from_hrep(HRep{2, {}}),
        Polyhedron::from_hrep(HRep{2, {}}),
        PCElem::empty(2),
        PCElem::empty(2),
    };

    r.k_polar = classical_polar(r.k);
    r.k_polar_polar = r.k_polar.classical_polar();
    r.l_polar = classical_polar(r.l);
    r.l_polar_polar = r.l_polar.classical_polar();
    r.k_star = dual_star(r.k);
    r.k_star_star = dual_star(r.k_star);

    r.polar_fails_on_k = !equal(r.k_polar_polar, r.k.set());
    r.polar_fails_on_l = !equal(r.l_polar_polar, r.l.set());
    r.star_involution_holds = pc_equal(r.k_star_star, r.k);

    // meet(K, L) is empty, so a meet/join interchange for the classical polar
    // would need conv(K polar, L polar) to be the whole plane.
    const PCElem meet_kl = meet(r.k, r.l);
    const Polyhedron polar_of_meet =
        meet_kl.is_empty() ? Polyhedron::from_hrep(HRep{2, {}})
                           : classical_polar(meet_kl);
    const Polyhedron hull_of_polars = convex_hull_union(r.k_polar, r.l_polar);
    r.polar_interchange_fails = !equal(polar_of_meet, hull_of_polars);
    return r;
}

std::string PolarCounterexampleReport::to_text() const {
    std::ostringstream out;
    auto dump_poly = [&out](const char* label, const Polyhedron& p) {
        out << label << ": " << to_json(p).dump() << '\n';
    };
    out << "K: " << to_json(k).dump() << '\n';
    out << "L: " << to_json(l).dump() << '\n';
    dump_poly("K polar", k_polar);
    dump_poly("K polar polar", k_polar_polar);
    dump_poly("L polar", l_polar);
    dump_poly("L polar polar", l_polar_polar);
    out << "K star: " << to_json(k_star).dump() << '\n';
    out << "K star star: " << to_json(k_star_star).dump() << '\n';
    out << "classical polar fails involution on K: " << (polar_fails_on_k ? "yes" : "no")
        << '\n';
    out << "classical polar fails involution on L: " << (polar_fails_on_l ? "yes" : "no")
        << '\n';
    out << "minus-one dual is an involution on K: " << (star_involution_holds ? "yes" : "no")
        << '\n';
    out << "classical polar interchange failure: " << (polar_interchange_fails ? "yes" : "no")
        << '\n';
    return out.str();
}

}  // namespace pcone
