#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ak/exterior.hpp"
#include "ak/graded_operator.hpp"
#include "ak/lie_algebra.hpp"

namespace ak::structure {

using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Rational;
using exterior::ExteriorSpace;
using exterior::FormValue;
using opcalc::GradedOperator;

enum class Axiom {
    JacobiIdentity,
    EvenDimension,
    JSquare,
    OmegaClosed,
    OmegaNondegenerate,
    OmegaJInvariant,
    MetricSPD,
};

std::string axiom_name(Axiom a);

// Validation failure naming the violated axiom.
class AkValidationError : public std::runtime_error {
  public:
    AkValidationError(Axiom axiom, const std::string& detail)
        : std::runtime_error(axiom_name(axiom) + ": " + detail), axiom_(axiom) {}
    Axiom axiom() const { return axiom_; }

  private:
    Axiom axiom_;
};

// Exact identity that must hold on every valid manifold failed; this is a
// build defect, not a data error (CLI exit code 2).
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Star-type operator whose target degree depends on the source degree
// (k -> n-k). block(k) maps Λ^k -> Λ^{n-k}.
struct DualityOperator {
    std::vector<ExactMatrix> blocks;
    const ExactMatrix& block(int k) const { return blocks.at(static_cast<std::size_t>(k)); }
    ExactMatrix apply(const ExactMatrix& v, int k) const { return blocks.at(static_cast<std::size_t>(k)) * v; }
};

struct NijenhuisData {
    // value[i][j] = N(xi_{i+1}, xi_{j+1}) as a rational coefficient column
    std::vector<std::vector<ExactMatrix>> value;
    bool vanishes = true;
    // (mu+mubar) = factor * (alpha -> alpha∘N as derivation); measured on the
    // 1-form basis and asserted constant where defined.
    bool factor_defined = false;
    Rational factor;           // -1/4 under the engine's conventions
};

// Validated almost Kähler bundle: algebra + (omega, J) + derived metric and
// the build-once table of structure operators. Immutable after construction.
class AKManifold {
  public:
    // Throws AkValidationError on any axiom violation, ConsistencyError if a
    // derived exact identity fails.
    AKManifold(std::string name, lie::LieAlgebraData algebra, ExactMatrix j_matrix, FormValue omega);

    const std::string& name() const { return name_; }
    int dim() const { return algebra_.dimension; }        // 2n
    int half_dim() const { return algebra_.dimension / 2; }  // n
    const lie::LieAlgebraData& algebra() const { return algebra_; }
    const ExteriorSpace& space() const { return *space_; }
    const ExactMatrix& j_matrix() const { return j_; }
    const FormValue& omega() const { return omega_; }
    const ExactMatrix& omega_matrix() const { return omega_matrix_; }

    const ExactMatrix& metric_on_vectors() const { return metric_vec_; }
    const ExactMatrix& gram1() const { return gram1_; }
    const ExactMatrix& gram(int k) const { return gram_.at(static_cast<std::size_t>(k)); }
    const std::vector<ExactMatrix>& gram_all() const { return gram_; }
    const FormValue& volume() const { return volume_; }
    const Rational& volume_coeff() const { return volume_coeff_; }

    const GradedOperator& d() const { return d_; }
    const GradedOperator& mu() const { return mu_; }
    const GradedOperator& del() const { return del_; }
    const GradedOperator& delbar() const { return delbar_; }
    const GradedOperator& mubar() const { return mubar_; }

    const GradedOperator& d_adj() const { return d_adj_; }
    const GradedOperator& mu_adj() const { return mu_adj_; }
    const GradedOperator& del_adj() const { return del_adj_; }
    const GradedOperator& delbar_adj() const { return delbar_adj_; }
    const GradedOperator& mubar_adj() const { return mubar_adj_; }

    const GradedOperator& lefschetz_l() const { return lef_l_; }
    const GradedOperator& lefschetz_lambda() const { return lef_lambda_; }
    const GradedOperator& counting_h() const { return counting_h_; }
    const GradedOperator& cal_j() const { return cal_j_; }
    const GradedOperator& cal_j_inv() const { return cal_j_inv_; }

    const DualityOperator& hodge_star() const { return star_; }
    const DualityOperator& symplectic_star() const { return star_s_; }

    const GradedOperator& d_lambda() const { return d_lambda_; }
    const GradedOperator& d_lambda_adj() const { return d_lambda_adj_; }

    // Projection onto bidegree (p,q); zero off degree p+q. Rejects p or q
    // outside 0..n.
    const GradedOperator& bigrade_projection(int p, int q) const;
    // Basis of Λ^{p,q} inside the complexified degree-(p+q) space (columns).
    const ExactMatrix& pq_basis(int p, int q) const;

    const NijenhuisData& nijenhuis() const { return nijenhuis_; }
    bool integrable() const { return nijenhuis_.vanishes; }

    // Gram adjoint of an arbitrary operator on this manifold.
    GradedOperator adjoint(const GradedOperator& op) const;

  private:
    std::string name_;
    lie::LieAlgebraData algebra_;
    ExactMatrix j_;
    FormValue omega_;

    std::unique_ptr<ExteriorSpace> space_;
    ExactMatrix omega_matrix_, metric_vec_, gram1_;
    std::vector<ExactMatrix> gram_;
    FormValue volume_;
    Rational volume_coeff_;

    GradedOperator d_, mu_, del_, delbar_, mubar_;
    GradedOperator d_adj_, mu_adj_, del_adj_, delbar_adj_, mubar_adj_;
    GradedOperator lef_l_, lef_lambda_, counting_h_, cal_j_, cal_j_inv_;
    DualityOperator star_, star_s_;
    GradedOperator d_lambda_, d_lambda_adj_;
    std::map<std::pair<int, int>, GradedOperator> projections_;
    std::map<std::pair<int, int>, ExactMatrix> pq_bases_;
    NijenhuisData nijenhuis_;

    void validate_axioms();
    void build_metric();
    void build_bigrading();
    void build_stars();
    void build_lefschetz();
    void build_d_lambda();
    void build_nijenhuis();
};

}  // namespace ak::structure
