#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ak/catalog.hpp"
#include "ak/cli_run.hpp"

using ak::cli::CliInvocation;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(CliInvocation inv) {
    std::ostringstream out, err;
    int code = ak::cli::run(inv, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate builtin torus4 exits 0") {
    CliInvocation inv;
    inv.command = "validate";
    inv.builtin = "torus4";
    auto r = run(inv);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all axioms pass") != std::string::npos);
}

TEST_CASE("report json carries the expected betti vector and HLC verdict") {
    CliInvocation inv;
    inv.command = "report";
    inv.builtin = "kodaira_thurston";
    inv.format = "json";
    auto r = run(inv);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["b"] == json::array({1, 3, 4, 3, 1}));
    CHECK(j["hlc"]["k1"] == false);
    CHECK(j["identities"]["all_pass"] == true);
}

TEST_CASE("constants command reports the sharp Mtilde(1,2) value") {
    CliInvocation inv;
    inv.command = "constants";
    inv.builtin = "kodaira_thurston";
    inv.family = "Mtilde";
    inv.degree = 1;
    inv.format = "json";
    auto r = run(inv);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["constants"].size() == 1);
    CHECK(j["constants"][0]["best_constant"] == "2");
}

TEST_CASE("identical invocations produce byte-identical output") {
    CliInvocation inv;
    inv.command = "report";
    inv.builtin = "kodaira_thurston";
    inv.format = "json";
    inv.seed = 42;
    auto a = run(inv);
    auto b = run(inv);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("validation failure exits 1") {
    auto man = ak::catalog::builtin_manifest("kodaira_thurston");
    ak::exterior::FormValue degenerate(4);
    degenerate.add_term(ak::exterior::IndexMonomial{{1, 2}}, ak::exact::GaussianRational(1));
    man.omega = degenerate;
    std::string path = "/tmp/akcalc_test_degenerate.json";
    std::ofstream(path) << ak::catalog::serialize_manifest(man);
    CliInvocation inv;
    inv.command = "validate";
    inv.builtin.reset();
    inv.file = path;
    auto r = run(inv);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("REJECTED") != std::string::npos);
}

TEST_CASE("io errors exit 3 with a diagnostic on the error stream") {
    CliInvocation inv;
    inv.command = "report";
    inv.file = "/tmp/does_not_exist_akcalc.json";
    auto r = run(inv);
    CHECK(r.exit_code == 3);
    CHECK(!r.err.empty());

    CliInvocation both;
    both.command = "report";
    both.builtin = "torus4";
    both.file = "/tmp/x.json";
    CHECK(run(both).exit_code == 3);

    CliInvocation unknown;
    unknown.command = "frobnicate";
    unknown.builtin = "torus4";
    CHECK(run(unknown).exit_code == 3);
}

TEST_CASE("spectrum command emits exact eigenvalues") {
    CliInvocation inv;
    inv.command = "spectrum";
    inv.builtin = "kodaira_thurston";
    inv.op = "d";
    inv.degree = 1;
    inv.format = "json";
    auto r = run(inv);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["degrees"][0]["smallest_positive"] == "1");
    // char poly of Delta_d on 1-forms is x^3 (x - 1)
    CHECK(j["degrees"][0]["eigenvalues"][0]["value"] == "0");
    CHECK(j["degrees"][0]["eigenvalues"][0]["multiplicity"] == 3);
    CHECK(j["degrees"][0]["eigenvalues"][1]["value"] == "1");
}

TEST_CASE("hlc command summarizes the four statements") {
    CliInvocation inv;
    inv.command = "hlc";
    inv.builtin = "kodaira_thurston";
    inv.format = "json";
    auto r = run(inv);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["holds"] == false);
    CHECK(j["statements"][1]["rank_L_restricted"] == 2);
    CHECK(j["non_hlc_degrees"] == json::array({0, 0, 2, 0, 0}));
}

TEST_CASE("decompose command reconstructs the input form") {
    CliInvocation inv;
    inv.command = "decompose";
    inv.builtin = "kodaira_thurston";
    inv.format = "json";
    inv.form_json = R"({"e1^e3": "-1", "e2^e4": "-1", "e1^e2": {"re": "1", "im": "0"}})";
    auto r = run(inv);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["reconstructs"] == true);
    CHECK(j["d_exact"].empty());  // zero form serializes to an empty map
    CHECK(j["harmonic"]["e1^e3"]["re"] == "-1");

    CliInvocation bad = inv;
    bad.form_json = R"({"e9": "1"})";
    CHECK(run(bad).exit_code == 3);
    CliInvocation none = inv;
    none.form_json.reset();
    CHECK(run(none).exit_code == 3);
}

TEST_CASE("markdown report renders the diamond") {
    CliInvocation inv;
    inv.command = "report";
    inv.builtin = "torus4";
    auto r = run(inv);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("Hodge diamond") != std::string::npos);
    CHECK(r.out.find("invariant Betti numbers") != std::string::npos);
}

TEST_CASE("bad eig width exits 3") {
    CliInvocation inv;
    inv.command = "report";
    inv.builtin = "torus4";
    inv.eig_width = "0";
    CHECK(run(inv).exit_code == 3);
    inv.eig_width = "nonsense";
    CHECK(run(inv).exit_code == 3);
}
