#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "eqlines/json_io.hpp"

using namespace eqlines;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "eqlines_cli_tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out_file = work_dir() / "stdout.txt";
    fs::path err_file = work_dir() / "stderr.txt";
    std::string cmd = std::string("'") + EQLINES_CLI_PATH + "' " + args + " > '" + out_file.string() +
                      "' 2> '" + err_file.string() + "'";
    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = read_text_file(out_file.string());
    result.err = read_text_file(err_file.string());
    return result;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

}  // namespace

TEST_CASE("gen writes canonical matrix JSON") {
    RunResult r = run_cli("gen --matrix fourier:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"backend\":\"exact\",\"rows\":2,\"cols\":2,"
                   "\"entries\":[[\"1\",\"1\"],[\"1\",\"-1\"]]}\n");
    CHECK(run_cli("gen --matrix nonsense").exit_code == 2);
    CHECK(run_cli("gen").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("construct then verify round trip") {
    std::string lines = path_of("f3_lines.json");
    RunResult c = run_cli("construct --matrix fourier:3 --v \"-2\" --out '" + lines + "'");
    REQUIRE(c.exit_code == 0);
    RunResult v = run_cli("verify --lines '" + lines + "'");
    CHECK(v.exit_code == 0);
    ordered_json report = parse_json_text(v.out);
    CHECK(report["verdict"] == true);
    CHECK(report["sic_ratio"] == "1/4");
    CHECK(report["common_magnitude_squared"] == "9");

    // re-serialization is byte-identical
    LineSet parsed = lineset_from_json(parse_json_text(read_text_file(lines)));
    CHECK(dump_json(lineset_to_json(parsed)) == read_text_file(lines));
}

TEST_CASE("construct output follows the set-major listing") {
    std::string lines = path_of("s8_lines.json");
    RunResult c = run_cli("construct --matrix sylvester:3 --v \"-1+2*i\" --out '" + lines + "'");
    REQUIRE(c.exit_code == 0);
    ordered_json doc = parse_json_text(read_text_file(lines));
    REQUIRE(doc["vectors"].size() == 64);
    CHECK(doc["vectors"][0]["set"] == 0);
    CHECK(doc["vectors"][0]["row"] == 0);
    CHECK(doc["vectors"][0]["entries"][0] == "-1+2*i");
    CHECK(doc["vectors"][9]["set"] == 1);
    CHECK(doc["vectors"][9]["row"] == 1);
    CHECK(doc["vectors"][9]["entries"][1] == "1-2*i");  // -v in the second coordinate
    CHECK(doc["vectors"][9]["entries"][0] == "1");
}

TEST_CASE("verify flags a perturbed line set with exit 1") {
    std::string lines = path_of("bad_lines.json");
    run_cli("construct --matrix fourier:3 --v \"-2\" --out '" + lines + "'");
    ordered_json doc = parse_json_text(read_text_file(lines));
    doc["vectors"][2]["entries"][1] = "7/5";
    write_text_file(lines, dump_json(doc));
    RunResult v = run_cli("verify --lines '" + lines + "'");
    CHECK(v.exit_code == 1);
    ordered_json report = parse_json_text(v.out);
    CHECK(report["verdict"] == false);
    bool touches2 = false;
    for (const auto& viol : report["violations"]) {
        touches2 = touches2 || viol["first"] == 2 || viol["second"] == 2;
    }
    CHECK(touches2);
}

TEST_CASE("solve with expectations") {
    CHECK(run_cli("solve --matrix sylvester:3 --expect \"-1+2*i,-1-2*i\"").exit_code == 0);
    CHECK(run_cli("solve --matrix sylvester:3 --expect \"-1+2*i\"").exit_code == 1);
    CHECK(run_cli("solve --matrix sylvester:2 --expect \"\"").exit_code == 0);
    RunResult r = run_cli("solve --matrix fourier:5");
    CHECK(r.exit_code == 0);
    ordered_json sols = parse_json_text(r.out);
    CHECK(sols["certificate"] == "mu_set_too_large");
    CHECK(sols["solutions"].empty());
}

TEST_CASE("solve accepts a matrix document from a file") {
    std::string mat = path_of("f2.json");
    run_cli("gen --matrix fourier:2 --out '" + mat + "'");
    RunResult r = run_cli("solve --matrix '" + mat + "'");
    CHECK(r.exit_code == 0);
    CHECK(parse_json_text(r.out)["solutions"].size() == 8);
}

TEST_CASE("real-equiv") {
    RunResult yes = run_cli("gen --matrix sylvester:3 --seed 7 --out '" + path_of("scr.json") + "'");
    REQUIRE(yes.exit_code == 0);
    RunResult r = run_cli("real-equiv --matrix '" + path_of("scr.json") + "'");
    CHECK(r.exit_code == 0);
    ordered_json doc = parse_json_text(r.out);
    CHECK(doc["present"] == true);
    for (const auto& row : doc["matrix"]["entries"])
        for (const auto& cell : row) CHECK((cell == "1" || cell == "-1"));

    RunResult no = run_cli("real-equiv --matrix fourier:4");
    CHECK(no.exit_code == 0);
    CHECK(parse_json_text(no.out)["present"] == false);
}

TEST_CASE("mu-set and gram") {
    RunResult mu = run_cli("mu-set --matrix fourier:3");
    CHECK(mu.exit_code == 0);
    ordered_json muj = parse_json_text(mu.out);
    CHECK(muj["values"].size() == 2);

    std::string lines = path_of("gram_lines.json");
    run_cli("construct --matrix fourier:2 --v \"i\" --out '" + lines + "'");
    RunResult g = run_cli("gram --lines '" + lines + "'");
    CHECK(g.exit_code == 0);
    ordered_json gj = parse_json_text(g.out);
    CHECK(gj["rows"] == 4);
    CHECK(gj["entries"][0][0] == "2");  // |i|^2 + 1
}

TEST_CASE("check-unitary") {
    CHECK(run_cli("check-unitary --matrix fourier:2 --scale 2").exit_code == 0);
    CHECK(run_cli("check-unitary --matrix fourier:2").exit_code == 1);
    CHECK(run_cli("check-unitary --matrix sylvester:3 --scale 8").exit_code == 0);
    RunResult r = run_cli("check-unitary --matrix fourier:3 --scale 2");
    CHECK(r.exit_code == 1);
    CHECK(parse_json_text(r.out)["holds"] == false);
}

TEST_CASE("float backend via the CLI") {
    std::string mat = path_of("f3_float.json");
    RunResult g = run_cli("gen --matrix fourier:3 --backend float --out '" + mat + "'");
    REQUIRE(g.exit_code == 0);
    CHECK(parse_json_text(read_text_file(mat))["backend"] == "float");
    std::string lines = path_of("f3_float_lines.json");
    RunResult c = run_cli("construct --matrix '" + mat + "' --v \"-2\" --out '" + lines + "'");
    REQUIRE(c.exit_code == 0);
    RunResult v = run_cli("verify --lines '" + lines + "' --tol 1e-10");
    CHECK(v.exit_code == 0);
    // exact solve on a float document is refused
    CHECK(run_cli("solve --matrix '" + mat + "'").exit_code == 2);
}

TEST_CASE("usage and format errors exit 2") {
    CHECK(run_cli("verify --lines '" + path_of("missing.json") + "'").exit_code == 2);
    write_text_file(path_of("broken.json"), "{not json");
    CHECK(run_cli("verify --lines '" + path_of("broken.json") + "'").exit_code == 2);
    CHECK(run_cli("construct --matrix fourier:3 --v \"1+**\"").exit_code == 2);
    write_text_file(path_of("notahadamard.json"),
                    dump_json(matrix_to_json(Matrix::filled(2, 2, Scalar::exact_integer(1)))));
    CHECK(run_cli("solve --matrix '" + path_of("notahadamard.json") + "'").exit_code == 2);

    // provenance out of range in a line-set document
    std::string lines = path_of("bad_prov.json");
    run_cli("construct --matrix fourier:2 --v \"i\" --out '" + lines + "'");
    ordered_json doc = parse_json_text(read_text_file(lines));
    doc["vectors"][0]["set"] = 9;
    write_text_file(lines, dump_json(doc));
    CHECK(run_cli("verify --lines '" + lines + "'").exit_code == 2);
}

TEST_CASE("theorem-table text output") {
    RunResult r = run_cli("theorem-table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sylvester:3") != std::string::npos);
    CHECK(r.out.find("-1-2*i, -1+2*i") != std::string::npos);
    CHECK(r.out.find("none (mu_set_too_large)") != std::string::npos);
}
