// End-to-end checks of the command line surface: exit codes, file output,
// and the dual round trip. Talks to the real binary via std::system.

#include "pcone/serialization.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace pcone;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

int run(const std::string& args, const fs::path& out_file) {
    const std::string cmd =
        std::string(PCONE_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / "pcone-cli-tests";
    fs::create_directories(dir);
    const fs::path log = dir / "out.txt";

    const std::string k_json = R"({
        "dim": 2,
        "hrep": [{"normal": ["-1","0"], "offset": "0"},
                 {"normal": ["0","-1"], "offset": "-1"}]
    })";
    write(dir / "K.json", k_json);
    const std::string quadrant_cone_json = R"({
        "dim": 2,
        "vrep": {"vertices": [["0","0"]], "rays": [["1","0"],["0","1"]]}
    })";
    write(dir / "C.json", quadrant_cone_json);
    const std::string wedge_json = R"({
        "dim": 2,
        "hrep": [{"normal": ["-1","-1"], "offset": "-2"},
                 {"normal": ["-1","0"], "offset": "0"},
                 {"normal": ["0","-1"], "offset": "0"}]
    })";
    write(dir / "W.json", wedge_json);

    // validate: pseudo-cone passes with exit 0 and emits an element.
    check(run("validate " + (dir / "K.json").string() + " -o " + (dir / "K_elem.json").string(),
              log) == 0,
          "validate accepts K");
    check(pcelem_from_json(load_json_file((dir / "K_elem.json").string())).is_cone(),
          "validated element is a cone");

    // validate: a cone through the origin fails with exit 1 and a report.
    write(dir / "quadrant.json", R"({
        "dim": 2,
        "hrep": [{"normal": ["-1","0"], "offset": "0"},
                 {"normal": ["0","-1"], "offset": "0"}]
    })");
    check(run("validate " + (dir / "quadrant.json").string(), log) == 1,
          "validate rejects the quadrant with exit 1");
    check(slurp(log).find("origin") != std::string::npos, "violation names the origin");

    // dual emits the documented dual and round trips semantically.
    check(run("dual " + (dir / "K.json").string() + " -o " + (dir / "K_dual.json").string(),
              log) == 0,
          "dual exits 0");
    {
        const PCElem dual = pcelem_from_json(load_json_file((dir / "K_dual.json").string()));
        const Polyhedron expected = Polyhedron::from_hrep(
            HRep{2,
                 {{{Rational(1), Rational(0)}, Rational(0)},
                  {{Rational(0), Rational(1)}, Rational(-1)}}});
        check(dual.is_cone() && equal(dual.set(), expected), "dual of K is {u<=0, v<=-1}");
    }
    check(run("dual " + (dir / "K_dual.json").string() + " -o " +
                  (dir / "K_dd.json").string(),
              log) == 0,
          "second dual exits 0");
    {
        const PCElem dd = pcelem_from_json(load_json_file((dir / "K_dd.json").string()));
        const PCElem k = pcelem_or_set_from_json(nlohmann::json::parse(k_json));
        check(pc_equal(dd, k), "dual twice returns to K");
    }

    // meet / join / rec / poshull / polarcone produce loadable output.
    check(run("meet " + (dir / "K.json").string() + " " + (dir / "W.json").string() + " -o " +
                  (dir / "M.json").string(),
              log) == 0,
          "meet exits 0");
    check(pcelem_from_json(load_json_file((dir / "M.json").string())).is_cone(),
          "meet emits an element");
    check(run("join " + (dir / "K.json").string() + " " + (dir / "W.json").string(), log) == 0,
          "join exits 0");
    check(run("rec " + (dir / "K.json").string(), log) == 0, "rec exits 0");
    check(run("poshull " + (dir / "K.json").string(), log) == 0, "poshull exits 0");
    check(run("polarcone " + (dir / "C.json").string(), log) == 0, "polarcone exits 0");

    // support and radial print exact values.
    check(run("support " + (dir / "K.json").string() + " -u '[\"0\",\"-1\"]'", log) == 0,
          "support exits 0");
    check(slurp(log).find("\"-1\"") != std::string::npos, "support value is -1");
    check(run("radial " + (dir / "W.json").string() + " -u '[\"1\",\"1\"]'", log) == 0,
          "radial exits 0");
    check(slurp(log).find("\"-1\"") != std::string::npos, "radial value is -1");
    check(run("radial " + (dir / "W.json").string() + " -u '[\"-1\",\"0\"]'", log) == 0,
          "radial handles undefined directions");
    check(slurp(log).find("undefined") != std::string::npos, "radial reports undefined");

    // transform with the coordinate swap.
    write(dir / "swap.json", R"([["0","1"],["1","0"]])");
    check(run("transform " + (dir / "K.json").string() + " -m " + (dir / "swap.json").string(),
              log) == 0,
          "transform exits 0");

    // cclose on the wedge inside the quadrant.
    check(run("cclose " + (dir / "C.json").string() + " " + (dir / "W.json").string(), log) == 0,
          "cclose exits 0");
    check(slurp(log).find("\"c_close\": true") != std::string::npos, "wedge is C-close");

    // suite passes, both runners.
    check(run("suite --dim 2 --trials 8 --seed 7", log) == 0, "suite exits 0");
    check(slurp(log).find("involution PASS 8/8 seed=7") != std::string::npos,
          "suite report format");
    check(run("suite --dim 2 --trials 8 --seed 7 --parallel --classification", log) == 0,
          "parallel suite with classification exits 0");

    // lattice checks: file, map, sweep.
    write(dir / "chain.txt", "3\n111\n011\n001\n");
    check(run("lattice-check " + (dir / "chain.txt").string(), log) == 0, "lattice file ok");
    write(dir / "rev.txt", "2 1 0");
    check(run("lattice-check " + (dir / "chain.txt").string() + " --map " +
                  (dir / "rev.txt").string(),
              log) == 0,
          "reversal map checks out");
    check(slurp(log).find("order_reversing=1") != std::string::npos, "triple is reported");
    check(run("lattice-check --sweep 3", log) == 0, "sweep exits 0");
    write(dir / "badposet.txt", "2\n11\n11\n");  // antisymmetry broken
    check(run("lattice-check " + (dir / "badposet.txt").string(), log) == 2,
          "bad poset is an input error");

    // demo counterexample prints and exits 0; svg lands on disk.
    check(run("demo-counterexample --emit-svg " + (dir / "demo.svg").string(), log) == 0,
          "demo exits 0");
    check(slurp(log).find("classical polar fails involution on K: yes") != std::string::npos,
          "demo reports the polar failure");
    check(slurp(dir / "demo.svg").find("<svg") != std::string::npos, "svg emitted");
    check(run("dual " + (dir / "K.json").string() + " --emit-svg " +
                  (dir / "dual.svg").string() + " --box 4",
              log) == 0,
          "dual with svg exits 0");
    check(slurp(dir / "dual.svg").find("<polygon") != std::string::npos,
          "dual svg has polygons");

    // input errors exit 2.
    check(run("dual " + (dir / "missing.json").string(), log) == 2, "missing file is exit 2");
    write(dir / "garbage.json", "{not json");
    check(run("dual " + (dir / "garbage.json").string(), log) == 2, "bad json is exit 2");
    write(dir / "inconsistent.json", R"({
        "dim": 2,
        "hrep": [{"normal": ["-1","0"], "offset": "0"},
                 {"normal": ["0","-1"], "offset": "-1"}],
        "vrep": {"vertices": [["0","1"],["-5","0"]], "rays": [["1","0"],["0","1"]]}
    })");
    check(run("validate " + (dir / "inconsistent.json").string(), log) == 2,
          "inconsistent reps are exit 2");
    check(slurp(log).find("(-5,0)") != std::string::npos,
          "the violating generator is named");
    check(run("dual " + (dir / "quadrant.json").string(), log) == 2,
          "non-pseudo-cone input to dual is exit 2");
    check(run("frobnicate", log) == 2, "unknown subcommand is exit 2");
    check(run("cclose " + (dir / "C.json").string() + " " + (dir / "quadrant.json").string(),
              log) == 2,
          "cclose precondition violation is exit 2");

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli checks failed\n";
    return 1;
}
