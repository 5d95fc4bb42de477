#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ak/operator_calc.hpp"
#include "ak/pencil.hpp"

namespace ak::harmonic {

using exact::ExactMatrix;
using exact::GaussianRational;
using exact::PencilResult;
using exact::Rational;
using exact::RealAlgebraicRoot;
using opcalc::GradedOperator;
using structure::AKManifold;

// Operator selections for harmonic spaces and spectra.
enum class OperatorKind { D, DLambda, Del, Delbar, Mu, Mubar, DelbarPlusMu, DelPlusMubar };

std::string operator_kind_name(OperatorKind k);
std::optional<OperatorKind> parse_operator_kind(const std::string& name);

// The first-order operator of the selection (whose Laplacian defines the
// harmonic space).
GradedOperator select_operator(const AKManifold& m, OperatorKind kind);

// Composite harmonic spaces of the d + dLambda / d dLambda cohomologies.
enum class CompositeSpace { DPlusDLambda, DDLambda };

struct HarmonicSpace {
    std::string label;
    int degree = 0;
    std::optional<std::pair<int, int>> bidegree;
    ExactMatrix basis;  // columns: canonical RREF kernel basis
    int dim() const { return static_cast<int>(basis.cols()); }
};

HarmonicSpace harmonic_space(const AKManifold& m, OperatorKind kind, int degree);
HarmonicSpace harmonic_space(const AKManifold& m, CompositeSpace which, int degree);
// ker Delta_delta ∩ Omega^{p,q}
HarmonicSpace harmonic_space_pq(const AKManifold& m, OperatorKind kind, int p, int q);
// ker Lambda ∩ Omega^k
HarmonicSpace primitive_space(const AKManifold& m, int degree);

// Intersection of column spans (canonical basis of the intersection).
ExactMatrix span_intersection(const ExactMatrix& a, const ExactMatrix& b);
// G-orthogonal complement of span(cols) inside Λ^k.
ExactMatrix orthocomplement(const AKManifold& m, const ExactMatrix& cols, int k);
// G-orthogonal projector onto span(cols) in degree k.
ExactMatrix orthogonal_projector(const AKManifold& m, const ExactMatrix& cols, int k);

struct HodgeBettiTable {
    std::vector<int> betti;           // CE cohomology dimensions, 0..2n
    std::vector<int> harmonic_d;      // dim ker Delta_d per degree
    std::map<std::pair<int, int>, int> hpq;  // h^{p,q} = dim(H^{p,q}_delbar ∩ H^{p,q}_mu)
    bool diamond_symmetric = false;   // h^{p,q} = h^{q,p} = h^{n-p,n-q}
    bool bounded_by_betti = false;    // sum_{p+q=k} h^{p,q} <= b^k
    bool odd_degree_even = false;     // odd-degree sums are even
};

HodgeBettiTable hodge_betti_numbers(const AKManifold& m);

struct DecompositionVerdict {
    int degree = 0;
    bool holds = false;       // dim ⊕ H^{p,q}_d == dim H^k_d
    int sum_hpq = 0;
    int harmonic_dim = 0;
    std::optional<std::string> witness;  // a harmonic form outside the bigraded sum
    bool lemma35_consistent = false;     // H^k_d ∩ H^k_mu ∩ H^k_mubar = ⊕ H^{p,q}_d
};

DecompositionVerdict hodge_decomposition_check(const AKManifold& m, int k);

struct PureFullVerdict {
    int degree = 0;
    bool pure = false;
    bool full = false;
    std::map<std::pair<int, int>, int> subspace_dims;  // dim H^{p,q} (invariant de Rham)
    int joint_dim = 0;
    int invariant_hk = 0;
    bool theorem39_respected = false;  // decomposition ⟹ pure-and-full
};

PureFullVerdict pure_full_check(const AKManifold& m, int k);

struct HlcDegreeReport {
    int degree = 0;
    bool s1_spaces_equal = false;        // H^k_d == H^k_dLambda
    bool s2_iso_on_harmonic = false;     // L^{n-k} iso H^k_d -> H^{2n-k}_d
    bool s3_iso_on_dlambda = false;      // L^{n-k} iso on the dLambda spaces
    bool s4_contained_in_ddl = false;    // H^k_d ⊂ H^k_{ddLambda}
    bool statements_agree = false;
    int rank_l_restricted = 0;           // dim(L^{n-k} H^k_d ∩ H^{2n-k}_d)
};

struct HlcReport {
    std::vector<HlcDegreeReport> per_degree;  // k = 0..n-1
    bool hlc_holds = false;
    std::vector<int> h_d_plus_dlambda;        // dim H^k_{d+dLambda}, 0..2n
    std::vector<int> non_hlc_degrees;         // Delta^k = 2(h^k_{d+dLambda} - b^k)
    bool cor44_respected = false;             // HLC ⟹ H^k_{d+dLambda} = H^k_d (k<n)
    bool prop45_respected = false;            // dim 4: H^2_{d+dL} = H^2_d ⟹ H^2_d = H^2_dL
};

HlcReport hlc_audit(const AKManifold& m);

// Smallest positive eigenvalue of the selected Laplacian in degree k; nullopt
// when the operator vanishes on invariant k-forms. Every root's sign is
// certified; a negative eigenvalue raises ConsistencyError.
std::optional<RealAlgebraicRoot> spectral_gap(const AKManifold& m, OperatorKind kind, int k,
                                              const Rational& width);

enum class Family { M, Mtilde, Mbar };
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

struct MembershipResult {
    Family family = Family::M;
    int degree = 0;
    bool infinite = false;
    RealAlgebraicRoot best_constant;  // defined when !infinite
    Rational threshold;
    bool meets_threshold = false;     // strict inequality
    bool at_threshold = false;        // equality: "threshold not strictly met"
};

MembershipResult membership_constant(const AKManifold& m, Family family, int k, const Rational& width);

enum class InequalityAudit { E1, P9, P11 };

struct InequalityAuditReport {
    InequalityAudit which = InequalityAudit::E1;
    int degree = 0;
    bool premise_met = false;        // threshold condition on the computed constant
    bool vacuous = false;            // right-hand side vanishes identically
    bool slack_nonnegative = false;  // certified on basis + seeded random vectors
    std::string min_slack;           // exact rational slack when representable
    std::string note;
};

InequalityAuditReport inequality_audit(const AKManifold& m, InequalityAudit which, int k,
                                       unsigned seed, const Rational& width);

struct LemmaL1Entry {
    int degree = 0;
    std::string form;
    std::string lhs, rhs;  // exact values
    bool equal = false;
};

struct LemmaL1Report {
    std::vector<LemmaL1Entry> e16;  // on every d-harmonic basis form, 0 < k <= n
    std::vector<LemmaL1Entry> e17;  // k = 1 refinement
    bool all_pass = true;
};

LemmaL1Report lemma_L1_audit(const AKManifold& m);

struct TheoremAuditEntry {
    std::string id;
    std::string statement;
    bool premise = false;
    bool conclusion = false;
    bool respected = false;  // premise ⟹ conclusion (or unconditional: conclusion)
    std::string note;
};

struct MuNormReport {
    std::string operator_norm_sq;    // sup |mu a|^2 / |a|^2 over real invariant 1-forms
    std::optional<Rational> operator_norm;  // exact square root when representable
    Rational max_coefficient_sq;     // max squared modulus of a matrix entry of mu on 1-forms
    std::optional<Rational> max_coefficient;
    std::string quarter_flag;        // which of the two equals 1/4
};

struct TheoremAuditReport {
    std::vector<TheoremAuditEntry> entries;
    int b2_plus = -1;                // dim 4 only: dim of self-dual d-harmonic 2-forms
    int one_plus_two_h20 = -1;
    bool integrable = false;
    MuNormReport mu_norms;
    bool all_respected = true;
};

TheoremAuditReport theorem_audit(const AKManifold& m, const Rational& width);

// Everything computed for one manifold.
struct HodgeReport {
    std::string name;
    int dimension = 0;
    unsigned seed = 0;
    std::string eig_width;
    // conventions recorded for reproducibility
    std::string d_sign_convention = "d a(X,Y) = -a([X,Y])";
    std::string dual_j_convention = "(J a)(X) = a(JX); (1,0) = +i eigenspace";
    std::string scope_caveat = "all verdicts are for the invariant subcomplex";
    std::string betti_label;  // "invariant Betti numbers" or "Betti numbers"

    HodgeBettiTable table;
    std::vector<int> harmonic_dlambda;            // dim H^k_dLambda
    std::vector<int> harmonic_delbar_mu;          // dim H^k_{delbar+mu}
    std::vector<DecompositionVerdict> decomposition;  // k = 0..2n
    std::vector<PureFullVerdict> pure_full;           // k = 0..2n
    HlcReport hlc;
    std::map<int, std::optional<RealAlgebraicRoot>> gap_d;          // per degree
    std::map<int, std::optional<RealAlgebraicRoot>> gap_delbar_mu;  // per degree
    std::vector<MembershipResult> membership;     // all families, k = 1..n
    std::vector<InequalityAuditReport> inequalities;
    opcalc::IdentitySuiteReport identities;
    LemmaL1Report lemma51;
    TheoremAuditReport theorems;
    std::string nijenhuis_factor;                 // measured derivation factor (mu+mubar vs N)
    std::string nijenhuis_sample;                 // N(xi_1, xi_2) value
};

HodgeReport build_hodge_report(const AKManifold& m, unsigned seed, const Rational& width,
                               bool nomizu_asserted = false);

// Hodge and Lefschetz decompositions of a supplied form (for the CLI).
struct FormDecomposition {
    int degree = 0;
    exterior::FormValue harmonic, d_exact, dstar_exact;  // Hodge parts
    std::vector<std::pair<int, exterior::FormValue>> lefschetz;  // form = sum L^r B_r, B_r primitive
    bool reconstructs = false;
};

FormDecomposition decompose_form(const AKManifold& m, const exterior::FormValue& form);

}  // namespace ak::harmonic
