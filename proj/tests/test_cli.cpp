#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ihara/cli.hpp"
#include "ihara/poly.hpp"

using namespace ihara;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_graph(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("ihara_cli_" + name + ".txt");
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("zeta of a triangle with all engines") {
    const auto path = write_graph("c3", "n 3\n0 1\n1 2\n2 0\n");
    const auto r = run({"zeta", "--graph", path, "--engine", "all"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("bass     u^6 - 2u^3 + 1") != std::string::npos);
    CHECK(r.out.find("enum     u^6 - 2u^3 + 1") != std::string::npos);
    CHECK(r.out.find("engines agree") != std::string::npos);
}

TEST_CASE("json output round trips and is deterministic") {
    const auto path = write_graph("k4", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const auto a = run({"zeta", "--graph", path, "--engine", "bass", "--format", "json"});
    const auto b = run({"zeta", "--graph", path, "--engine", "bass", "--format", "json"});
    REQUIRE(a.code == cli::kSuccess);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["engine"] == "bass");
    CHECK(j["graph"]["n_vertices"] == 4);
    CHECK(j["graph"]["edges"].size() == 6);
    CHECK(j["invariants"]["degree"] == 12);
    const std::string coeffs_text = j["coeffs"].dump();
    const IntPoly p = IntPoly::from_json(R"({"coeffs":)" + coeffs_text + "}");
    CHECK(p.to_json() == R"({"coeffs":)" + coeffs_text + "}");
    CHECK(a.out.find(R"("coeffs":)" + coeffs_text) != std::string::npos);
}

TEST_CASE("family with verification") {
    const auto r = run({"family", "--spec", "G(3,4)", "--verify"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("-3u^14") != std::string::npos);
    CHECK(r.out.find("MATCH") != std::string::npos);
    const auto m = run({"family", "--spec", "M(6)", "--verify", "--format", "json"});
    CHECK(m.code == cli::kSuccess);
    CHECK(nlohmann::json::parse(m.out)["verify"]["match"] == true);
}

TEST_CASE("spanning trees of K_4") {
    const auto r = run({"trees", "--spec", "K(4)", "--format", "csv"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == "method,kappa\nkirchhoff,16\nzeta-derivative,16\nclosed-form,16\n");
}

TEST_CASE("rank2 and verify subcommands") {
    const auto r = run({"rank2", "--max-edges", "5", "--audit"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("EXHAUSTIVE") != std::string::npos);
    const auto v = run({"verify", "--max-edges", "4", "--format", "json"});
    CHECK(v.code == cli::kSuccess);
    const auto j = nlohmann::json::parse(v.out);
    CHECK(j["graphs"] == 20);
    CHECK(j["failures"].empty());
}

TEST_CASE("exit codes") {
    CHECK(run({"zeta", "--graph", "/nonexistent/g.txt"}).code == cli::kInputError);
    CHECK(run({"family", "--spec", "G(3"}).code == cli::kInputError);
    CHECK(run({"family", "--spec", "O(5)"}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"zeta", "--spec", "K(4)", "--format", "yaml"}).code == cli::kInputError);
    const auto path = write_graph("pendant", "n 3\n0 1\n1 2\n1 1\n");
    CHECK(run({"zeta", "--graph", path}).code == cli::kInputError);
    CHECK(run({"zeta", "--graph", path, "--spec", "K(4)"}).code == cli::kInputError);
    CHECK(run({"trees", "--spec", "C(5)"}).code == cli::kSuccess);
    CHECK(run({"zeta", "--spec", "K(5)", "--engine", "enum"}).code == cli::kSizeCap);
    CHECK(run({"zeta", "--spec", "K(4)", "--engine", "enum", "--cap", "40"}).code == cli::kSizeCap);
    CHECK(run({"zeta", "--spec", "K(5)"}).code == cli::kSuccess);
    CHECK(run({"--help"}).code == cli::kSuccess);
}
