// Batch front end for the pseudo-cone toolkit: load sets, apply operators,
// run the theorem suites, and emit machine-readable results.
//
// Exit codes are part of the contract: 0 on success or when every checked
// property passes, 1 when a check fails (the counterexample goes to stdout),
// 2 on unusable input (parse errors, inconsistent representations,
// precondition violations, unknown commands).

#include "pcone/harness.hpp"
#include "pcone/lattice.hpp"
#include "pcone/serialization.hpp"
#include "pcone/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        pcone::write_text_file(out_path, j.dump(2) + "\n");
    }
}

void maybe_emit_svg(const std::vector<pcone::PlotSet>& sets, const std::string& svg_path,
                    const std::string& box) {
    if (svg_path.empty()) return;
    pcone::write_text_file(svg_path, pcone::render_svg(sets, pcone::parse_rational(box)));
}

struct SuiteOptions {
    int dim = 2;
    int trials = 100;
    std::uint64_t seed = 0;
    int vertices = 3;
    int extra_rays = 2;
    int bound = 8;
    bool parallel = false;
};

pcone::GenConfig to_config(const SuiteOptions& o) {
    return {o.dim, o.vertices, o.extra_rays, o.bound, o.seed};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudo-cone duality toolkit"};
    app.require_subcommand(1);

    std::string in_path, in_path2, out_path, direction, matrix_path;
    std::string svg_path, svg_box = "4";
    std::string map_path;
    int sweep_size = 0;
    SuiteOptions suite_opts;
    bool classification = false;

    auto* validate_cmd = app.add_subcommand("validate", "check that a set is a pseudo-cone");
    validate_cmd->add_option("input", in_path, "polyhedron or element JSON")->required();
    validate_cmd->add_option("-o,--output", out_path, "write the element here");

    auto* dual_cmd = app.add_subcommand("dual", "minus-one dual of a pseudo-cone");
    dual_cmd->add_option("input", in_path)->required();
    dual_cmd->add_option("-o,--output", out_path);
    dual_cmd->add_option("--emit-svg", svg_path, "render input and dual (dim 2 only)");
    dual_cmd->add_option("--box", svg_box, "half-width of the drawing box");

    auto* polar_cmd = app.add_subcommand("polar", "classical polar of a pseudo-cone");
    polar_cmd->add_option("input", in_path)->required();
    polar_cmd->add_option("-o,--output", out_path);

    auto* meet_cmd = app.add_subcommand("meet", "lattice meet (intersection)");
    meet_cmd->add_option("left", in_path)->required();
    meet_cmd->add_option("right", in_path2)->required();
    meet_cmd->add_option("-o,--output", out_path);

    auto* join_cmd = app.add_subcommand("join", "lattice join (closed hull or the whole space)");
    join_cmd->add_option("left", in_path)->required();
    join_cmd->add_option("right", in_path2)->required();
    join_cmd->add_option("-o,--output", out_path);

    auto* rec_cmd = app.add_subcommand("rec", "recession cone");
    rec_cmd->add_option("input", in_path)->required();
    rec_cmd->add_option("-o,--output", out_path);

    auto* poshull_cmd = app.add_subcommand("poshull", "closed positive hull");
    poshull_cmd->add_option("input", in_path)->required();
    poshull_cmd->add_option("-o,--output", out_path);

    auto* polarcone_cmd = app.add_subcommand("polarcone", "polar of a convex cone");
    polarcone_cmd->add_option("input", in_path)->required();
    polarcone_cmd->add_option("-o,--output", out_path);

    auto* support_cmd = app.add_subcommand("support", "support value in a direction");
    support_cmd->add_option("input", in_path)->required();
    support_cmd->add_option("-u,--direction", direction, "JSON array of rationals")->required();

    auto* radial_cmd = app.add_subcommand("radial", "radial value in a direction");
    radial_cmd->add_option("input", in_path)->required();
    radial_cmd->add_option("-u,--direction", direction, "JSON array of rationals")->required();

    auto* transform_cmd = app.add_subcommand("transform", "image under an invertible map");
    transform_cmd->add_option("input", in_path)->required();
    transform_cmd->add_option("-m,--matrix", matrix_path, "matrix JSON file")->required();
    transform_cmd->add_option("-o,--output", out_path);

    auto* cclose_cmd = app.add_subcommand("cclose", "decide C-closeness of K inside C");
    cclose_cmd->add_option("cone", in_path, "the cone C")->required();
    cclose_cmd->add_option("set", in_path2, "the pseudo-cone K")->required();

    auto* suite_cmd = app.add_subcommand("suite", "run the theorem suites on random instances");
    suite_cmd->add_option("--dim", suite_opts.dim);
    suite_cmd->add_option("--trials", suite_opts.trials);
    suite_cmd->add_option("--seed", suite_opts.seed);
    suite_cmd->add_option("--vertices", suite_opts.vertices);
    suite_cmd->add_option("--extra-rays", suite_opts.extra_rays);
    suite_cmd->add_option("--bound", suite_opts.bound);
    suite_cmd->add_flag("--parallel", suite_opts.parallel, "run trials across threads");
    suite_cmd->add_flag("--classification", classification,
                        "also check the meet/join interchange statements");

    auto* lattice_cmd = app.add_subcommand("lattice-check", "finite-lattice checks");
    auto* lattice_input = lattice_cmd->add_option("input", in_path, "lattice text file");
    lattice_cmd->add_option("--map", map_path, "map file to test against the lattice");
    lattice_cmd
        ->add_option("--sweep", sweep_size,
                     "exhaustively verify all lattices up to this size")
        ->excludes(lattice_input);

    auto* demo_cmd = app.add_subcommand("demo-counterexample",
                                        "the fixed pair where the classical polar fails");
    demo_cmd->add_option("--emit-svg", svg_path);
    demo_cmd->add_option("--box", svg_box);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitBadInput;
    }

    using namespace pcone;
    try {
        if (validate_cmd->parsed()) {
            const auto doc = load_json_file(in_path);
            if (doc.is_object() && doc.contains("kind")) {
                emit(to_json(pcelem_from_json(doc)), out_path);
                return kExitOk;
            }
            const Polyhedron p = polyhedron_from_json(doc);
            ValidationResult r = validate(p);
            if (auto* v = std::get_if<Violation>(&r)) {
                std::cout << "not a pseudo-cone: " << v->to_string() << "\n";
                return kExitCheckFailed;
            }
            emit(to_json(std::get<PCElem>(r)), out_path);
            return kExitOk;
        }
        if (dual_cmd->parsed()) {
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path));
            if (!svg_path.empty() && k.dim() != 2) {
                throw std::invalid_argument("--emit-svg needs a two-dimensional set");
            }
            const PCElem d = dual_star(k);
            emit(to_json(d), out_path);
            if (!svg_path.empty()) {
                std::vector<PlotSet> sets;
                if (k.is_cone()) sets.push_back({k.set(), "#1f77b4", "K"});
                if (d.is_cone()) sets.push_back({d.set(), "#d62728", "K*"});
                maybe_emit_svg(sets, svg_path, svg_box);
            }
            return kExitOk;
        }
        if (polar_cmd->parsed()) {
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path));
            emit(to_json(classical_polar(k)), out_path);
            return kExitOk;
        }
        if (meet_cmd->parsed() || join_cmd->parsed()) {
            const PCElem a = pcelem_or_set_from_json(load_json_file(in_path));
            const PCElem b = pcelem_or_set_from_json(load_json_file(in_path2));
            emit(to_json(meet_cmd->parsed() ? meet(a, b) : join(a, b)), out_path);
            return kExitOk;
        }
        if (rec_cmd->parsed()) {
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path));
            emit(to_json(recession_cone(k)), out_path);
            return kExitOk;
        }
        if (poshull_cmd->parsed()) {
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path));
            emit(to_json(closed_positive_hull(k)), out_path);
            return kExitOk;
        }
        if (polarcone_cmd->parsed()) {
            const ConvexCone c = convex_cone_from_json(load_json_file(in_path));
            emit(to_json(polar_cone(c)), out_path);
            return kExitOk;
        }
        if (support_cmd->parsed() || radial_cmd->parsed()) {
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path));
            const Vector u = vector_from_json(nlohmann::json::parse(direction));
            nlohmann::json j;
            if (support_cmd->parsed()) {
                j["support"] = to_string(support(k, u));
            } else {
                const auto rho = radial(k, u);
                j["radial"] = rho ? to_string(*rho) : "undefined";
            }
            emit(j, out_path);
            return kExitOk;
        }
        if (transform_cmd->parsed()) {
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path));
            const LinMap g = linmap_from_json(load_json_file(matrix_path));
            emit(to_json(apply_gl(g, k)), out_path);
            return kExitOk;
        }
        if (cclose_cmd->parsed()) {
            const ConvexCone c = convex_cone_from_json(load_json_file(in_path));
            const PCElem k = pcelem_or_set_from_json(load_json_file(in_path2));
            const CCloseVerdict v = c_close(c, k);
            emit(nlohmann::json{{"c_close", v.c_close()},
                                {"finite", v.finite},
                                {"positive", v.positive}},
                 out_path);
            return kExitOk;
        }
        if (suite_cmd->parsed()) {
            const GenConfig cfg = to_config(suite_opts);
            const RunPolicy policy =
                suite_opts.parallel ? RunPolicy::Parallel : RunPolicy::Serial;
            SuiteReport report = run_duality_suite(cfg, suite_opts.trials, policy);
            bool ok = report.all_passed();
            std::cout << report.to_text();
            if (classification) {
                InstanceRng rng(cfg.seed, 99, 0);
                const LinMap g = gen_glmap(cfg.dim, cfg.coordinate_bound, rng);
                SuiteReport cls =
                    run_classification_statement_check(g, cfg, suite_opts.trials, policy);
                ok = ok && cls.all_passed();
                std::cout << cls.to_text();
            }
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (lattice_cmd->parsed()) {
            if (sweep_size > 0) {
                for (int size = 1; size <= sweep_size; ++size) {
                    const auto lattices = enumerate_lattices(size);
                    const auto bijections = all_bijections(size);
                    std::uint64_t checked = 0;
                    for (const auto& L : lattices) {
                        for (const auto& f : bijections) {
                            if (!check_dual_for_lattice(L, f).tri_equivalent()) {
                                std::cout << "tri-equivalence FAIL on lattice\n"
                                          << format_lattice(L);
                                return kExitCheckFailed;
                            }
                            ++checked;
                        }
                        for (const auto& f : all_maps(size)) {
                            if (is_endomorphism(L, f) && !check_endo_monotone(L, f)) {
                                std::cout << "monotonicity FAIL on lattice\n"
                                          << format_lattice(L);
                                return kExitCheckFailed;
                            }
                        }
                    }
                    std::cout << "size " << size << ": " << lattices.size() << " lattices, "
                              << checked << " bijections checked, tri-equivalence PASS\n";
                }
                return kExitOk;
            }
            std::ifstream in(in_path);
            if (!in) throw ParseError("cannot open file: " + in_path);
            FiniteLattice L = parse_lattice(in);
            std::cout << "lattice of size " << L.size() << ": ok\n";
            if (!map_path.empty()) {
                std::ifstream min(map_path);
                if (!min) throw ParseError("cannot open file: " + map_path);
                const LatticeMap f = parse_lattice_map(min, L.size());
                if (f.is_bijection()) {
                    const DualityTriple t = check_dual_for_lattice(L, f);
                    std::cout << "order_reversing=" << t.order_reversing
                              << " join_to_meet=" << t.join_to_meet
                              << " meet_to_join=" << t.meet_to_join << "\n";
                    if (!t.tri_equivalent()) {
                        std::cout << "tri-equivalence FAIL\n";
                        return kExitCheckFailed;
                    }
                } else if (is_endomorphism(L, f)) {
                    std::cout << "endomorphism, monotone="
                              << check_endo_monotone(L, f) << "\n";
                } else {
                    const auto w = endomorphism_witness(L, f);
                    std::cout << "not an endomorphism, witness pair (" << w->first << ","
                              << w->second << ")\n";
                    return kExitCheckFailed;
                }
            }
            return kExitOk;
        }
        if (demo_cmd->parsed()) {
            const PolarCounterexampleReport r = demo_polar_counterexample();
            std::cout << r.to_text();
            if (!svg_path.empty()) {
                maybe_emit_svg({{r.k.set(), "#1f77b4", "K"},
                                {r.k_polar_polar, "#2ca02c", "K polar polar"},
                                {r.k_star_star.set(), "#d62728", "K**"}},
                               svg_path, svg_box);
            }
            return r.as_expected() ? kExitOk : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
