#include "ak/cli_run.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ak/catalog.hpp"
#include "ak/report.hpp"

namespace ak::cli {

using catalog::ManifoldManifest;
using harmonic::OperatorKind;
using nlohmann::ordered_json;
using report::ordered_json;
using structure::AKManifold;

namespace {

exterior::FormValue parse_form_json(const std::string& text, int dimension) {
    ordered_json j = ordered_json::parse(text);
    if (!j.is_object()) throw catalog::ManifestError("", "form must be an object of monomial keys");
    exterior::FormValue f(dimension);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto mono = exterior::parse_monomial_key(it.key(), dimension);
        if (!mono) throw catalog::ManifestError("/" + it.key(), "bad monomial key");
        const auto& v = it.value();
        exact::GaussianRational c;
        if (v.is_string()) {
            c = exact::GaussianRational(exact::parse_rational(v.get<std::string>()));
        } else if (v.is_object() && v.contains("re") && v.contains("im")) {
            c = exact::GaussianRational(exact::parse_rational(v["re"].get<std::string>()),
                                        exact::parse_rational(v["im"].get<std::string>()));
        } else {
            throw catalog::ManifestError("/" + it.key(), "coefficient must be a rational string or {re,im}");
        }
        f.add_term(*mono, c);
    }
    return f;
}

int spectrum_command(const AKManifold& m, const CliInvocation& inv, const exact::Rational& width,
                     std::ostream& out) {
    OperatorKind kind = OperatorKind::D;
    if (inv.op) {
        auto k = harmonic::parse_operator_kind(*inv.op);
        if (!k) throw std::invalid_argument("unknown operator: " + *inv.op);
        kind = *k;
    }
    opcalc::GradedOperator lap = opcalc::laplacian(m, harmonic::select_operator(m, kind));
    ordered_json degrees = ordered_json::array();
    int lo = inv.degree.value_or(0), hi = inv.degree.value_or(m.dim());
    for (int k = lo; k <= hi; ++k) {
        ordered_json e;
        e["degree"] = k;
        exact::Polynomial p = exact::to_real_polynomial(exact::char_poly(lap.block(k)));
        e["char_poly"] = p.str();
        ordered_json roots = ordered_json::array();
        if (!p.is_zero())
            for (const auto& r : exact::isolate_real_roots(p, width)) roots.push_back(report::root_to_json(r));
        e["eigenvalues"] = roots;
        auto gap = harmonic::spectral_gap(m, kind, k, width);
        e["smallest_positive"] = gap ? gap->str() : "none";
        degrees.push_back(e);
    }
    ordered_json j;
    j["manifold"] = m.name();
    j["operator"] = harmonic::operator_kind_name(kind);
    j["degrees"] = degrees;
    if (inv.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "# Spectrum of Delta_" << harmonic::operator_kind_name(kind) << " on " << m.name() << "\n\n";
        for (const auto& e : j["degrees"]) {
            out << "- degree " << e["degree"] << ": char poly `" << e["char_poly"].get<std::string>()
                << "`, smallest positive eigenvalue: " << e["smallest_positive"].get<std::string>() << "\n";
        }
    }
    return 0;
}

int constants_command(const AKManifold& m, const CliInvocation& inv, const exact::Rational& width,
                      std::ostream& out) {
    std::vector<harmonic::Family> families;
    if (inv.family) {
        auto f = harmonic::parse_family(*inv.family);
        if (!f) throw std::invalid_argument("unknown family: " + *inv.family);
        families = {*f};
    } else {
        families = {harmonic::Family::M, harmonic::Family::Mtilde, harmonic::Family::Mbar};
    }
    std::vector<int> degrees;
    if (inv.degree) degrees = {*inv.degree};
    else
        for (int k = 1; k <= m.half_dim(); ++k) degrees.push_back(k);
    ordered_json arr = ordered_json::array();
    for (auto fam : families)
        for (int k : degrees) arr.push_back(report::membership_to_json(harmonic::membership_constant(m, fam, k, width)));
    if (inv.format == "json") {
        ordered_json j;
        j["manifold"] = m.name();
        j["constants"] = arr;
        out << j.dump(2) << "\n";
    } else {
        out << "# Membership constants: " << m.name()
            << "\n\n| family | k | best constant | threshold | strictly met |\n|---|---|---|---|---|\n";
        for (const auto& e : arr)
            out << "| " << e["family"].get<std::string>() << " | " << e["degree"] << " | "
                << e["best_constant"].get<std::string>() << " | " << e["threshold"].get<std::string>()
                << " | " << (e["meets_threshold"].get<bool>() ? "yes" : (e["at_threshold"].get<bool>() ? "at threshold" : "no"))
                << " |\n";
    }
    return 0;
}

}  // namespace

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
    try {
        if (static_cast<bool>(inv.builtin) == static_cast<bool>(inv.file)) {
            err << "error: exactly one of --builtin or --file is required\n";
            return 3;
        }
        exact::Rational width = exact::parse_rational(inv.eig_width);
        if (width <= 0) {
            err << "error: --eig-width must be positive\n";
            return 3;
        }

        ManifoldManifest manifest;
        if (inv.builtin) {
            manifest = catalog::builtin_manifest(*inv.builtin);
        } else {
            std::ifstream f(*inv.file);
            if (!f) {
                err << "error: cannot open " << *inv.file << "\n";
                return 3;
            }
            std::ostringstream ss;
            ss << f.rdbuf();
            manifest = catalog::parse_manifest(ss.str());
        }

        if (inv.command == "validate") {
            try {
                AKManifold m = catalog::build_manifold(manifest);
                ordered_json j;
                j["name"] = m.name();
                j["valid"] = true;
                j["axioms"] = {"jacobi_identity", "even_dimension", "j_square", "omega_closed",
                               "omega_nondegenerate", "omega_j_invariant", "metric_spd"};
                j["integrable"] = m.integrable();
                if (inv.format == "json") out << j.dump(2) << "\n";
                else {
                    out << "# Validation: " << m.name() << "\n\nall axioms pass";
                    for (const auto& a : manifest.annotations) out << "\n- note: " << a;
                    out << "\n";
                }
                return 0;
            } catch (const structure::AkValidationError& e) {
                if (inv.format == "json") {
                    ordered_json j;
                    j["name"] = manifest.name;
                    j["valid"] = false;
                    j["violated_axiom"] = structure::axiom_name(e.axiom());
                    j["detail"] = e.what();
                    out << j.dump(2) << "\n";
                } else {
                    out << "# Validation: " << manifest.name << "\n\nREJECTED: " << e.what() << "\n";
                }
                return 1;
            }
        }

        AKManifold m = catalog::build_manifold(manifest);
        bool nomizu = manifest.compact_quotient == "assumed_nilmanifold_nomizu";

        if (inv.command == "report") {
            harmonic::HodgeReport rep = harmonic::build_hodge_report(m, inv.seed, width, nomizu);
            if (inv.format == "json") out << report::to_json(rep).dump(2) << "\n";
            else out << report::to_markdown(rep);
            bool consistent = rep.identities.all_pass && rep.lemma51.all_pass &&
                              rep.theorems.all_respected && rep.table.diamond_symmetric &&
                              rep.table.bounded_by_betti && rep.table.odd_degree_even;
            for (const auto& iq : rep.inequalities) consistent = consistent && iq.slack_nonnegative;
            return consistent ? 0 : 2;
        }
        if (inv.command == "identities") {
            auto rep = opcalc::identity_suite(m);
            if (inv.format == "json") out << report::identities_to_json(rep).dump(2) << "\n";
            else out << report::identities_to_markdown(rep);
            return rep.all_pass ? 0 : 2;
        }
        if (inv.command == "hlc") {
            auto rep = harmonic::hlc_audit(m);
            if (inv.format == "json") out << report::hlc_to_json(rep).dump(2) << "\n";
            else out << report::hlc_to_markdown(rep);
            for (const auto& r : rep.per_degree)
                if (!r.statements_agree) return 2;
            return 0;
        }
        if (inv.command == "spectrum") return spectrum_command(m, inv, width, out);
        if (inv.command == "constants") return constants_command(m, inv, width, out);
        if (inv.command == "decompose") {
            std::string text;
            if (inv.form_json) {
                text = *inv.form_json;
            } else if (inv.form_file) {
                std::ifstream f(*inv.form_file);
                if (!f) {
                    err << "error: cannot open " << *inv.form_file << "\n";
                    return 3;
                }
                std::ostringstream ss;
                ss << f.rdbuf();
                text = ss.str();
            } else {
                err << "error: decompose requires --form or --form-file\n";
                return 3;
            }
            auto d = harmonic::decompose_form(m, parse_form_json(text, m.dim()));
            if (inv.format == "json") out << report::decomposition_to_json(d).dump(2) << "\n";
            else out << report::decomposition_to_markdown(d);
            return d.reconstructs ? 0 : 2;
        }
        err << "error: unknown command '" << inv.command << "'\n";
        return 3;
    } catch (const structure::AkValidationError& e) {
        err << "validation failure: " << e.what() << "\n";
        return 1;
    } catch (const structure::ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const catalog::ManifestError& e) {
        err << "manifest error at '" << e.pointer() << "': " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ak::cli
