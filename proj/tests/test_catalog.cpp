#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ak/catalog.hpp"
#include "ak/harmonic.hpp"

using namespace ak;
using catalog::ManifestError;
using catalog::ManifoldManifest;

TEST_CASE("builtins parse, validate, and round-trip") {
    for (const auto& name : catalog::builtin_names()) {
        ManifoldManifest m = catalog::builtin_manifest(name);
        std::string text = catalog::serialize_manifest(m);
        ManifoldManifest back = catalog::parse_manifest(text);
        CHECK(back.name == m.name);
        CHECK(back.dimension == m.dimension);
        CHECK(back.brackets.brackets == m.brackets.brackets);
        CHECK(back.omega == m.omega);
        CHECK(back.j == m.j);
        CHECK(back.compact_quotient == m.compact_quotient);
        CHECK(back.annotations == m.annotations);
        CHECK(catalog::serialize_manifest(back) == text);  // bit-exact round trip
        CHECK_NOTHROW(catalog::build_manifold(back));
    }
}

TEST_CASE("builtin values") {
    auto m = catalog::builtin("kodaira_thurston");
    auto table = harmonic::hodge_betti_numbers(m);
    CHECK(table.betti[1] == 3);
    auto t = catalog::builtin("torus4");
    CHECK(t.nijenhuis().vanishes);
    auto t6 = catalog::builtin("torus6");
    CHECK(harmonic::hlc_audit(t6).hlc_holds);
    CHECK_THROWS_AS(catalog::builtin("nope"), std::invalid_argument);
}

TEST_CASE("malformed rational is rejected with a pointer") {
    std::string text = catalog::serialize_manifest(catalog::builtin_manifest("kodaira_thurston"));
    auto pos = text.find("\"c\": \"1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"c\": \"1/0\"");
    try {
        catalog::parse_manifest(text);
        FAIL("expected rejection");
    } catch (const ManifestError& e) {
        CHECK(std::string(e.pointer()).find("/brackets/0/terms/0/c") == 0);
    }
}

TEST_CASE("schema violations") {
    // bracket with i >= j
    std::string bad_bracket = R"({
      "schema": 1, "name": "x", "dimension": 4,
      "brackets": [{"i": 1, "j": 1, "terms": [{"k": 2, "c": "1"}]}],
      "omega": [{"i": 1, "j": 2, "c": "1"}, {"i": 3, "j": 4, "c": "1"}],
      "J": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]],
      "compact_quotient": "assumed", "annotations": []
    })";
    CHECK_THROWS_AS(catalog::parse_manifest(bad_bracket), ManifestError);

    std::string unknown_key = R"({"schema": 1, "name": "x", "dimension": 4, "brackets": [],
      "omega": [], "J": [], "compact_quotient": "assumed", "annotations": [], "extra": 1})";
    CHECK_THROWS_AS(catalog::parse_manifest(unknown_key), ManifestError);

    std::string dup = R"({
      "schema": 1, "name": "x", "dimension": 4,
      "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
                    {"i": 1, "j": 2, "terms": [{"k": 4, "c": "1"}]}],
      "omega": [{"i": 1, "j": 2, "c": "1"}],
      "J": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]],
      "compact_quotient": "assumed", "annotations": []
    })";
    CHECK_THROWS_AS(catalog::parse_manifest(dup), ManifestError);

    CHECK_THROWS_AS(catalog::parse_manifest("not json"), ManifestError);
    CHECK_THROWS_AS(catalog::parse_manifest(R"({"schema": 2})"), ManifestError);
}

TEST_CASE("every builtin passes the full identity suite") {
    for (const auto& name : catalog::builtin_names()) {
        auto rep = opcalc::identity_suite(catalog::builtin(name));
        CHECK_MESSAGE(rep.all_pass, name);
    }
}

TEST_CASE("kodaira_thurston carries the printed-discrepancy annotations") {
    auto m = catalog::builtin_manifest("kodaira_thurston");
    bool da2 = false, jsign = false, nsign = false;
    for (const auto& a : m.annotations) {
        if (a.find("d a2") != std::string::npos) da2 = true;
        if (a.find("negative definite") != std::string::npos) jsign = true;
        if (a.find("N(xi1,xi2)") != std::string::npos) nsign = true;
    }
    CHECK(da2);
    CHECK(jsign);
    CHECK(nsign);
}
