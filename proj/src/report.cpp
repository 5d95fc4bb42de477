#include "ak/report.hpp"

#include <sstream>

namespace ak::report {

using harmonic::Family;
using harmonic::HodgeReport;

ordered_json root_to_json(const exact::RealAlgebraicRoot& r) {
    ordered_json j;
    if (r.kind == exact::RealAlgebraicRoot::Kind::ExactRational) {
        j["kind"] = "exact-rational";
        j["value"] = exact::to_string(r.value);
    } else {
        j["kind"] = "isolated";
        j["lo"] = exact::to_string(r.lo);
        j["hi"] = exact::to_string(r.hi);
    }
    j["multiplicity"] = r.multiplicity;
    return j;
}

ordered_json form_to_json(const exterior::FormValue& f) {
    ordered_json j = ordered_json::object();
    for (const auto& [m, c] : f.terms()) {
        ordered_json coeff;
        coeff["re"] = exact::to_string(c.re);
        coeff["im"] = exact::to_string(c.im);
        j[m.key()] = coeff;
    }
    return j;
}

ordered_json membership_to_json(const harmonic::MembershipResult& r) {
    ordered_json j;
    j["family"] = harmonic::family_name(r.family);
    j["degree"] = r.degree;
    if (r.infinite) {
        j["best_constant"] = "+inf";
    } else {
        j["best_constant"] = r.best_constant.str();
        j["best_constant_detail"] = root_to_json(r.best_constant);
    }
    j["threshold"] = exact::to_string(r.threshold);
    j["meets_threshold"] = r.meets_threshold;
    j["at_threshold"] = r.at_threshold;
    return j;
}

ordered_json identities_to_json(const opcalc::IdentitySuiteReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json j;
        j["id"] = c.id;
        j["anchor"] = c.anchor;
        j["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) j["max_defect"] = c.max_defect;
        arr.push_back(j);
    }
    ordered_json out;
    out["manifold"] = rep.manifold;
    out["all_pass"] = rep.all_pass;
    out["checks"] = arr;
    return out;
}

std::string identities_to_markdown(const opcalc::IdentitySuiteReport& rep) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
    os << "# Identity suite: " << rep.manifold << "\n\n";
    os << passed << "/" << rep.checks.size() << " identities hold exactly."
       << (rep.all_pass ? "" : "  **FAILURES PRESENT**") << "\n\n";
    os << "| id | identity | status |\n|---|---|---|\n";
    for (const auto& c : rep.checks) {
        os << "| " << c.id << " | `" << c.anchor << "` | " << (c.pass ? "pass" : "**fail** " + c.max_defect)
           << " |\n";
    }
    return os.str();
}

ordered_json hlc_to_json(const harmonic::HlcReport& rep) {
    ordered_json j;
    for (const auto& r : rep.per_degree) j["k" + std::to_string(r.degree)] = r.s1_spaces_equal;
    j["holds"] = rep.hlc_holds;
    ordered_json per = ordered_json::array();
    for (const auto& r : rep.per_degree) {
        ordered_json e;
        e["degree"] = r.degree;
        e["spaces_equal"] = r.s1_spaces_equal;
        e["iso_on_harmonic"] = r.s2_iso_on_harmonic;
        e["iso_on_dlambda"] = r.s3_iso_on_dlambda;
        e["contained_in_ddlambda"] = r.s4_contained_in_ddl;
        e["statements_agree"] = r.statements_agree;
        e["rank_L_restricted"] = r.rank_l_restricted;
        per.push_back(e);
    }
    j["statements"] = per;
    j["h_d_plus_dlambda"] = rep.h_d_plus_dlambda;
    j["non_hlc_degrees"] = rep.non_hlc_degrees;
    j["cor44_respected"] = rep.cor44_respected;
    j["prop45_respected"] = rep.prop45_respected;
    return j;
}

std::string hlc_to_markdown(const harmonic::HlcReport& rep) {
    std::ostringstream os;
    os << "# Hard Lefschetz audit\n\n";
    os << "HLC on harmonic forms: **" << (rep.hlc_holds ? "holds" : "fails") << "**\n\n";
    os << "| k | spaces equal | L^{n-k} iso (d) | L^{n-k} iso (dL) | in H_{ddL} | agree | rank L |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rep.per_degree)
        os << "| " << r.degree << " | " << r.s1_spaces_equal << " | " << r.s2_iso_on_harmonic << " | "
           << r.s3_iso_on_dlambda << " | " << r.s4_contained_in_ddl << " | " << r.statements_agree
           << " | " << r.rank_l_restricted << " |\n";
    os << "\nnon-HLC degrees Delta^k = ";
    for (std::size_t k = 0; k < rep.non_hlc_degrees.size(); ++k)
        os << (k ? ", " : "") << rep.non_hlc_degrees[k];
    os << "\n";
    return os.str();
}

namespace {

ordered_json gap_to_json(const std::map<int, std::optional<exact::RealAlgebraicRoot>>& gaps) {
    ordered_json j;
    for (const auto& [k, g] : gaps) {
        if (g) j["k" + std::to_string(k)] = g->str();
        else j["k" + std::to_string(k)] = "none";
    }
    return j;
}

}  // namespace

ordered_json to_json(const HodgeReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["dimension"] = rep.dimension;
    j["seed"] = rep.seed;
    j["eig_width"] = rep.eig_width;
    ordered_json conv;
    conv["d_sign"] = rep.d_sign_convention;
    conv["dual_j"] = rep.dual_j_convention;
    conv["scope"] = rep.scope_caveat;
    conv["nijenhuis_derivation_factor"] = rep.nijenhuis_factor;
    conv["nijenhuis_sample_N(xi1,xi2)"] = rep.nijenhuis_sample;
    j["conventions"] = conv;
    j["betti_label"] = rep.betti_label;
    j["b"] = rep.table.betti;
    ordered_json hpq;
    for (const auto& [pq, h] : rep.table.hpq)
        hpq[std::to_string(pq.first) + "," + std::to_string(pq.second)] = h;
    j["h_pq"] = hpq;
    j["diamond_symmetric"] = rep.table.diamond_symmetric;
    j["sum_hpq_bounded_by_betti"] = rep.table.bounded_by_betti;
    j["odd_degree_sums_even"] = rep.table.odd_degree_even;
    j["dim_harmonic_d"] = rep.table.harmonic_d;
    j["dim_harmonic_dlambda"] = rep.harmonic_dlambda;
    j["dim_harmonic_delbar_mu"] = rep.harmonic_delbar_mu;

    ordered_json dec = ordered_json::array();
    for (const auto& v : rep.decomposition) {
        ordered_json e;
        e["degree"] = v.degree;
        e["holds"] = v.holds;
        e["sum_hpq"] = v.sum_hpq;
        e["dim_harmonic"] = v.harmonic_dim;
        if (v.witness) e["witness"] = *v.witness;
        e["lemma35_consistent"] = v.lemma35_consistent;
        dec.push_back(e);
    }
    j["hodge_decomposition"] = dec;

    ordered_json pf = ordered_json::array();
    for (const auto& v : rep.pure_full) {
        ordered_json e;
        e["degree"] = v.degree;
        e["pure"] = v.pure;
        e["full"] = v.full;
        e["invariant_hk"] = v.invariant_hk;
        e["theorem39_respected"] = v.theorem39_respected;
        pf.push_back(e);
    }
    j["pure_full"] = pf;

    j["hlc"] = hlc_to_json(rep.hlc);
    if (rep.theorems.b2_plus >= 0) {
        j["b2_plus"] = rep.theorems.b2_plus;
        j["one_plus_two_h20"] = rep.theorems.one_plus_two_h20;
    }
    j["integrable"] = rep.theorems.integrable;
    ordered_json mun;
    mun["operator_norm_sq"] = rep.theorems.mu_norms.operator_norm_sq;
    if (rep.theorems.mu_norms.operator_norm)
        mun["operator_norm"] = exact::to_string(*rep.theorems.mu_norms.operator_norm);
    mun["max_coefficient_sq"] = exact::to_string(rep.theorems.mu_norms.max_coefficient_sq);
    if (rep.theorems.mu_norms.max_coefficient)
        mun["max_coefficient"] = exact::to_string(*rep.theorems.mu_norms.max_coefficient);
    mun["equals_one_quarter"] = rep.theorems.mu_norms.quarter_flag;
    j["mu_norm"] = mun;

    j["spectral_gap_d"] = gap_to_json(rep.gap_d);
    j["spectral_gap_delbar_mu"] = gap_to_json(rep.gap_delbar_mu);

    ordered_json mem = ordered_json::array();
    for (const auto& r : rep.membership) mem.push_back(membership_to_json(r));
    j["membership"] = mem;

    ordered_json ineq = ordered_json::array();
    for (const auto& r : rep.inequalities) {
        ordered_json e;
        e["which"] = r.which == harmonic::InequalityAudit::E1 ? "E1"
                     : r.which == harmonic::InequalityAudit::P9 ? "P9" : "P11";
        e["degree"] = r.degree;
        e["premise_met"] = r.premise_met;
        e["vacuous"] = r.vacuous;
        e["slack_nonnegative"] = r.slack_nonnegative;
        e["min_slack"] = r.min_slack;
        if (!r.note.empty()) e["note"] = r.note;
        ineq.push_back(e);
    }
    j["inequalities"] = ineq;

    j["identities"] = identities_to_json(rep.identities);

    ordered_json l51;
    l51["all_pass"] = rep.lemma51.all_pass;
    ordered_json e16 = ordered_json::array();
    for (const auto& e : rep.lemma51.e16) {
        ordered_json x;
        x["degree"] = e.degree;
        x["form"] = e.form;
        x["lhs"] = e.lhs;
        x["rhs"] = e.rhs;
        x["equal"] = e.equal;
        e16.push_back(x);
    }
    l51["E16"] = e16;
    ordered_json e17 = ordered_json::array();
    for (const auto& e : rep.lemma51.e17) {
        ordered_json x;
        x["form"] = e.form;
        x["lhs"] = e.lhs;
        x["rhs"] = e.rhs;
        x["equal"] = e.equal;
        e17.push_back(x);
    }
    l51["E17"] = e17;
    j["lemma51"] = l51;

    ordered_json th = ordered_json::array();
    for (const auto& e : rep.theorems.entries) {
        ordered_json x;
        x["id"] = e.id;
        x["statement"] = e.statement;
        x["premise"] = e.premise;
        x["conclusion"] = e.conclusion;
        x["respected"] = e.respected;
        if (!e.note.empty()) x["note"] = e.note;
        th.push_back(x);
    }
    j["theorem_audit"] = th;
    j["all_theorems_respected"] = rep.theorems.all_respected;
    return j;
}

std::string to_markdown(const HodgeReport& rep) {
    std::ostringstream os;
    int n = rep.dimension / 2;
    os << "# Hodge report: " << rep.name << "\n\n";
    os << "- dimension: " << rep.dimension << "\n";
    os << "- seed: " << rep.seed << ", eigenvalue isolation width: " << rep.eig_width << "\n";
    os << "- convention: " << rep.d_sign_convention << "; " << rep.dual_j_convention << "\n";
    os << "- " << rep.scope_caveat << "\n";
    os << "- integrable: " << (rep.theorems.integrable ? "yes" : "no")
       << "; Nijenhuis derivation factor: " << rep.nijenhuis_factor
       << "; N(xi1,xi2) = " << rep.nijenhuis_sample << "\n\n";

    os << "## " << rep.betti_label << "\n\n|k|";
    for (std::size_t k = 0; k < rep.table.betti.size(); ++k) os << k << "|";
    os << "\n|-|";
    for (std::size_t k = 0; k < rep.table.betti.size(); ++k) os << "-|";
    os << "\n|b^k|";
    for (int b : rep.table.betti) os << b << "|";
    os << "\n\n";

    os << "## Hodge diamond (h^{p,q}, rows k = p+q, columns p-q)\n\n";
    os << "| k \\ p-q |";
    for (int c = -n; c <= n; ++c) os << " " << c << " |";
    os << "\n|---|";
    for (int c = -n; c <= n; ++c) os << "---|";
    os << "\n";
    for (int k = 0; k <= rep.dimension; ++k) {
        os << "| " << k << " |";
        for (int c = -n; c <= n; ++c) {
            // p - q = c, p + q = k
            if ((k + c) % 2 != 0) { os << "  |"; continue; }
            int p = (k + c) / 2, q = (k - c) / 2;
            auto it = rep.table.hpq.find({p, q});
            if (it == rep.table.hpq.end()) os << "  |";
            else os << " " << it->second << " |";
        }
        os << "\n";
    }
    os << "\ndiamond symmetries: " << (rep.table.diamond_symmetric ? "hold" : "FAIL")
       << "; sum h^{p,q} <= b^k: " << (rep.table.bounded_by_betti ? "holds" : "FAIL") << "\n\n";

    os << "## Verdicts\n\n| k | Hodge decomposition | pure | full | HLC spaces equal |\n|---|---|---|---|---|\n";
    for (int k = 0; k <= rep.dimension; ++k) {
        os << "| " << k << " | " << (rep.decomposition[k].holds ? "yes" : "no") << " | "
           << (rep.pure_full[k].pure ? "yes" : "no") << " | " << (rep.pure_full[k].full ? "yes" : "no")
           << " | ";
        if (k < n) os << (rep.hlc.per_degree[k].s1_spaces_equal ? "yes" : "no");
        else os << "-";
        os << " |\n";
    }
    os << "\n" << hlc_to_markdown(rep.hlc) << "\n";
    if (rep.theorems.b2_plus >= 0)
        os << "b2+ = " << rep.theorems.b2_plus << " (1 + 2 h^{2,0} = " << rep.theorems.one_plus_two_h20
           << ")\n\n";

    os << "## Spectral gaps (Delta_d)\n\n";
    for (const auto& [k, g] : rep.gap_d)
        os << "- degree " << k << ": " << (g ? g->str() : "none") << "\n";
    os << "\n## Membership constants\n\n| family | k | best constant | threshold | strictly met |\n|---|---|---|---|---|\n";
    for (const auto& r : rep.membership)
        os << "| " << harmonic::family_name(r.family) << " | " << r.degree << " | "
           << (r.infinite ? "+inf" : r.best_constant.str()) << " | " << exact::to_string(r.threshold)
           << " | " << (r.meets_threshold ? "yes" : (r.at_threshold ? "at threshold" : "no")) << " |\n";

    os << "\n## Identity suite\n\n";
    int passed = 0;
    for (const auto& c : rep.identities.checks) passed += c.pass ? 1 : 0;
    os << passed << "/" << rep.identities.checks.size() << " identities hold exactly";
    if (!rep.identities.all_pass) {
        os << "; failures:\n";
        for (const auto& c : rep.identities.checks)
            if (!c.pass) os << "- " << c.id << " (" << c.anchor << "): " << c.max_defect << "\n";
    }
    os << "\n\n## Energy identities (E16/E17)\n\n- verdict: " << (rep.lemma51.all_pass ? "hold exactly" : "FAIL")
       << " on every d-harmonic basis form\n";

    os << "\n## Theorem audit\n\n| id | premise | conclusion | respected | note |\n|---|---|---|---|---|\n";
    for (const auto& e : rep.theorems.entries)
        os << "| " << e.id << " | " << e.premise << " | " << e.conclusion << " | "
           << (e.respected ? "yes" : "NO") << " | " << e.note << " |\n";
    os << "\n## mu norms\n\n- operator norm^2 on real invariant 1-forms: "
       << rep.theorems.mu_norms.operator_norm_sq;
    if (rep.theorems.mu_norms.operator_norm)
        os << " (norm " << exact::to_string(*rep.theorems.mu_norms.operator_norm) << ")";
    os << "\n- max coefficient modulus^2: " << exact::to_string(rep.theorems.mu_norms.max_coefficient_sq);
    if (rep.theorems.mu_norms.max_coefficient)
        os << " (modulus " << exact::to_string(*rep.theorems.mu_norms.max_coefficient) << ")";
    os << "\n- equals 1/4: " << rep.theorems.mu_norms.quarter_flag << "\n";
    return os.str();
}

ordered_json decomposition_to_json(const harmonic::FormDecomposition& d) {
    ordered_json j;
    j["degree"] = d.degree;
    j["harmonic"] = form_to_json(d.harmonic);
    j["d_exact"] = form_to_json(d.d_exact);
    j["dstar_exact"] = form_to_json(d.dstar_exact);
    ordered_json lef = ordered_json::array();
    for (const auto& [r, b] : d.lefschetz) {
        ordered_json e;
        e["power"] = r;
        e["primitive"] = form_to_json(b);
        lef.push_back(e);
    }
    j["lefschetz"] = lef;
    j["reconstructs"] = d.reconstructs;
    return j;
}

std::string decomposition_to_markdown(const harmonic::FormDecomposition& d) {
    std::ostringstream os;
    os << "# Decomposition of a degree-" << d.degree << " form\n\n";
    os << "## Hodge\n\n- harmonic: " << d.harmonic.str() << "\n- d-exact: " << d.d_exact.str()
       << "\n- d*-exact: " << d.dstar_exact.str() << "\n";
    os << "\n## Lefschetz (form = sum L^r B_r, B_r primitive)\n\n";
    if (d.lefschetz.empty()) os << "- 0\n";
    for (const auto& [r, b] : d.lefschetz) os << "- r = " << r << ": B = " << b.str() << "\n";
    os << "\nreconstructs exactly: " << (d.reconstructs ? "yes" : "NO") << "\n";
    return os.str();
}

}  // namespace ak::report
