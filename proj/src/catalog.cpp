#include "ak/catalog.hpp"

#include <json.hpp>

namespace ak::catalog {

using exact::GaussianRational;
using exterior::IndexMonomial;
using nlohmann::ordered_json;

namespace {

Rational parse_rat_at(const ordered_json& j, const std::string& ptr) {
    if (!j.is_string()) throw ManifestError(ptr, "rational must be a string");
    try {
        return exact::parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ManifestError(ptr, e.what());
    }
}

void require_keys(const ordered_json& j, const std::vector<std::string>& keys, const std::string& ptr) {
    if (!j.is_object()) throw ManifestError(ptr, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            throw ManifestError(ptr + "/" + it.key(), "unknown key");
    }
    for (const auto& k : keys)
        if (!j.contains(k) && k != "annotations" && k != "compact_quotient")
            throw ManifestError(ptr + "/" + k, "missing required key");
}

}  // namespace

ManifoldManifest parse_manifest(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ManifestError("", std::string("invalid JSON: ") + e.what());
    }
    require_keys(j, {"schema", "name", "dimension", "brackets", "omega", "J", "compact_quotient", "annotations"}, "");

    ManifoldManifest m;
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
        throw ManifestError("/schema", "unsupported schema version");
    if (!j["name"].is_string()) throw ManifestError("/name", "must be a string");
    m.name = j["name"].get<std::string>();
    if (!j["dimension"].is_number_integer()) throw ManifestError("/dimension", "must be an integer");
    m.dimension = j["dimension"].get<int>();
    if (m.dimension < 2 || m.dimension > 16) throw ManifestError("/dimension", "out of supported range");

    m.brackets.dimension = m.dimension;
    if (!j["brackets"].is_array()) throw ManifestError("/brackets", "must be an array");
    int bi = 0;
    for (const auto& b : j["brackets"]) {
        std::string ptr = "/brackets/" + std::to_string(bi++);
        require_keys(b, {"i", "j", "terms"}, ptr);
        if (!b["i"].is_number_integer() || !b["j"].is_number_integer())
            throw ManifestError(ptr, "i and j must be integers");
        int i = b["i"].get<int>(), jj = b["j"].get<int>();
        if (i < 1 || jj < 1 || i > m.dimension || jj > m.dimension)
            throw ManifestError(ptr, "bracket index out of range");
        if (i >= jj) throw ManifestError(ptr, "brackets require i < j");
        if (m.brackets.brackets.count({i, jj})) throw ManifestError(ptr, "duplicate bracket key");
        std::map<int, Rational> terms;
        if (!b["terms"].is_array()) throw ManifestError(ptr + "/terms", "must be an array");
        int ti = 0;
        for (const auto& t : b["terms"]) {
            std::string tptr = ptr + "/terms/" + std::to_string(ti++);
            require_keys(t, {"k", "c"}, tptr);
            if (!t["k"].is_number_integer()) throw ManifestError(tptr + "/k", "must be an integer");
            int k = t["k"].get<int>();
            if (k < 1 || k > m.dimension) throw ManifestError(tptr + "/k", "index out of range");
            if (terms.count(k)) throw ManifestError(tptr + "/k", "duplicate term");
            terms[k] = parse_rat_at(t["c"], tptr + "/c");
        }
        m.brackets.brackets[{i, jj}] = std::move(terms);
    }

    m.omega = FormValue(m.dimension);
    if (!j["omega"].is_array()) throw ManifestError("/omega", "must be an array");
    int oi = 0;
    for (const auto& t : j["omega"]) {
        std::string ptr = "/omega/" + std::to_string(oi++);
        require_keys(t, {"i", "j", "c"}, ptr);
        int i = t["i"].get<int>(), jj = t["j"].get<int>();
        if (i < 1 || jj < 1 || i > m.dimension || jj > m.dimension || i == jj)
            throw ManifestError(ptr, "omega term indices out of range");
        Rational c = parse_rat_at(t["c"], ptr + "/c");
        // store canonically: omega = sum c * a_i ∧ a_j
        if (i < jj) m.omega.add_term(IndexMonomial{{i, jj}}, GaussianRational(c));
        else m.omega.add_term(IndexMonomial{{jj, i}}, GaussianRational(-c));
    }

    if (!j["J"].is_array() || static_cast<int>(j["J"].size()) != m.dimension)
        throw ManifestError("/J", "must be an n x n array of rational strings");
    m.j = ExactMatrix(m.dimension, m.dimension);
    for (int r = 0; r < m.dimension; ++r) {
        const auto& row = j["J"][r];
        std::string ptr = "/J/" + std::to_string(r);
        if (!row.is_array() || static_cast<int>(row.size()) != m.dimension)
            throw ManifestError(ptr, "row has wrong length");
        for (int c = 0; c < m.dimension; ++c)
            m.j.at(r, c) = GaussianRational(parse_rat_at(row[c], ptr + "/" + std::to_string(c)));
    }

    if (j.contains("compact_quotient")) {
        if (!j["compact_quotient"].is_string()) throw ManifestError("/compact_quotient", "must be a string");
        m.compact_quotient = j["compact_quotient"].get<std::string>();
    }
    if (j.contains("annotations")) {
        if (!j["annotations"].is_array()) throw ManifestError("/annotations", "must be an array");
        for (const auto& a : j["annotations"]) {
            if (!a.is_string()) throw ManifestError("/annotations", "entries must be strings");
            m.annotations.push_back(a.get<std::string>());
        }
    }
    return m;
}

std::string serialize_manifest(const ManifoldManifest& m) {
    ordered_json j;
    j["schema"] = 1;
    j["name"] = m.name;
    j["dimension"] = m.dimension;
    j["brackets"] = ordered_json::array();
    for (const auto& [ij, terms] : m.brackets.brackets) {
        ordered_json b;
        b["i"] = ij.first;
        b["j"] = ij.second;
        b["terms"] = ordered_json::array();
        for (const auto& [k, c] : terms) {
            ordered_json t;
            t["k"] = k;
            t["c"] = exact::to_string(c);
            b["terms"].push_back(t);
        }
        j["brackets"].push_back(b);
    }
    j["omega"] = ordered_json::array();
    for (const auto& [mono, c] : m.omega.terms()) {
        ordered_json t;
        t["i"] = mono.indices[0];
        t["j"] = mono.indices[1];
        t["c"] = exact::to_string(c.re);
        j["omega"].push_back(t);
    }
    j["J"] = ordered_json::array();
    for (int r = 0; r < m.dimension; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.dimension; ++c) row.push_back(exact::to_string(m.j.at(r, c).re));
        j["J"].push_back(row);
    }
    j["compact_quotient"] = m.compact_quotient;
    j["annotations"] = m.annotations;
    return j.dump(2);
}

structure::AKManifold build_manifold(const ManifoldManifest& m) {
    return structure::AKManifold(m.name, m.brackets, m.j, m.omega);
}

std::vector<std::string> builtin_names() { return {"torus4", "torus6", "kodaira_thurston"}; }

namespace {

ManifoldManifest torus_manifest(int n, const std::string& name) {
    ManifoldManifest m;
    m.name = name;
    m.dimension = n;
    m.brackets.dimension = n;
    m.omega = FormValue(n);
    m.j = ExactMatrix(n, n);
    for (int i = 0; i < n / 2; ++i) {
        m.omega.add_term(IndexMonomial{{2 * i + 1, 2 * i + 2}}, GaussianRational(1));
        // J xi_{2i+1} = xi_{2i+2}, J xi_{2i+2} = -xi_{2i+1}
        m.j.at(2 * i + 1, 2 * i) = GaussianRational(1);
        m.j.at(2 * i, 2 * i + 1) = GaussianRational(-1);
    }
    m.annotations = {"abelian algebra with the standard Kaehler structure"};
    return m;
}

ManifoldManifest kodaira_thurston_manifest() {
    ManifoldManifest m;
    m.name = "kodaira_thurston";
    m.dimension = 4;
    m.brackets.dimension = 4;
    m.brackets.brackets[{1, 4}] = {{2, Rational(1)}};
    m.omega = FormValue(4);
    // omega = a3 ∧ a1 + a4 ∧ a2
    m.omega.add_term(IndexMonomial{{1, 3}}, GaussianRational(-1));
    m.omega.add_term(IndexMonomial{{2, 4}}, GaussianRational(-1));
    // J xi1 = -xi3, J xi2 = -xi4, J xi3 = xi1, J xi4 = xi2.
    m.j = ExactMatrix(4, 4);
    m.j.at(2, 0) = GaussianRational(-1);
    m.j.at(3, 1) = GaussianRational(-1);
    m.j.at(0, 2) = GaussianRational(1);
    m.j.at(1, 3) = GaussianRational(1);
    m.annotations = {
        "with the stated bracket [xi1,xi4]=xi2 and a2 = dz - x dy, the Chevalley-Eilenberg "
        "differential gives d a2 = -a1^a4; the source example prints d a2 = -a2^a4, which is "
        "inconsistent with its own bracket table and is not used",
        "the stored J is the omega-calibrated member of {+J,-J}: the source example's "
        "J xi1 = xi3, J xi2 = xi4 makes g = omega(.,J.) negative definite under the standard "
        "wedge conventions; every derived invariant here is unchanged under J -> -J",
        "direct evaluation of the Nijenhuis formula gives N(xi1,xi2) = +xi4 for either sign "
        "of J; the source example prints -xi4"};
    return m;
}

}  // namespace

ManifoldManifest builtin_manifest(const std::string& name) {
    if (name == "torus4") return torus_manifest(4, "torus4");
    if (name == "torus6") return torus_manifest(6, "torus6");
    if (name == "kodaira_thurston") return kodaira_thurston_manifest();
    throw std::invalid_argument("unknown builtin manifold: " + name);
}

structure::AKManifold builtin(const std::string& name) { return build_manifold(builtin_manifest(name)); }

}  // namespace ak::catalog
