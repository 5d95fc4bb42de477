#include "ak/manifold.hpp"

#include <algorithm>

namespace ak::structure {

using exact::gauss_i;
using exterior::IndexMonomial;
using opcalc::BidegreeShift;
using opcalc::compose;
using opcalc::graded_commutator;
using opcalc::gram_adjoint;

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::JacobiIdentity: return "jacobi_identity";
        case Axiom::EvenDimension: return "even_dimension";
        case Axiom::JSquare: return "j_square";
        case Axiom::OmegaClosed: return "omega_closed";
        case Axiom::OmegaNondegenerate: return "omega_nondegenerate";
        case Axiom::OmegaJInvariant: return "omega_j_invariant";
        case Axiom::MetricSPD: return "metric_spd";
    }
    return "unknown";
}

AKManifold::AKManifold(std::string name, lie::LieAlgebraData algebra, ExactMatrix j_matrix,
                       FormValue omega)
    : name_(std::move(name)), algebra_(std::move(algebra)), j_(std::move(j_matrix)),
      omega_(std::move(omega)) {
    auto jac = lie::validate_lie_algebra(algebra_);
    if (!jac.ok) {
        auto& f = jac.failures.front();
        throw AkValidationError(Axiom::JacobiIdentity,
                                "Jacobi fails at triple (" + std::to_string(f.i) + "," +
                                    std::to_string(f.j) + "," + std::to_string(f.k) + ")");
    }
    space_ = std::make_unique<ExteriorSpace>(algebra_.dimension);
    d_ = lie::ce_differential(algebra_, *space_);
    validate_axioms();
    build_metric();
    build_bigrading();
    build_stars();
    build_lefschetz();
    build_d_lambda();
    build_nijenhuis();
}

void AKManifold::validate_axioms() {
    int n = algebra_.dimension;
    if (n % 2 != 0) throw AkValidationError(Axiom::EvenDimension, "dimension " + std::to_string(n) + " is odd");
    if (j_.rows() != static_cast<std::size_t>(n) || j_.cols() != static_cast<std::size_t>(n) || !j_.is_real())
        throw AkValidationError(Axiom::JSquare, "J is not a real " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (!(j_ * j_ == -ExactMatrix::identity(n)))
        throw AkValidationError(Axiom::JSquare, "J^2 != -I");

    auto deg = omega_.degree();
    if (omega_.is_zero() || !deg || *deg != 2)
        throw AkValidationError(Axiom::OmegaNondegenerate, "omega is not a nonzero 2-form");
    ExactMatrix omv = space_->to_vector(omega_, 2);
    if (!(d_.block(2) * omv).is_zero())
        throw AkValidationError(Axiom::OmegaClosed, "d(omega) != 0");

    FormValue top = exterior::wedge_power(omega_, half_dim());
    if (top.is_zero())
        throw AkValidationError(Axiom::OmegaNondegenerate, "omega^n = 0");

    // omega as a bilinear form on vectors
    omega_matrix_ = ExactMatrix(n, n);
    for (const auto& [m, c] : omega_.terms()) {
        omega_matrix_.at(m.indices[0] - 1, m.indices[1] - 1) = c;
        omega_matrix_.at(m.indices[1] - 1, m.indices[0] - 1) = -c;
    }
    if (!(j_.transpose() * omega_matrix_ * j_ == omega_matrix_))
        throw AkValidationError(Axiom::OmegaJInvariant, "omega(J.,J.) != omega");

    // g(X,Y) = omega(X, JY)
    metric_vec_ = omega_matrix_ * j_;
    if (!(metric_vec_.transpose() == metric_vec_))
        throw AkValidationError(Axiom::MetricSPD, "g not symmetric");
    for (int k = 1; k <= n; ++k) {
        ExactMatrix minor(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor.at(r, c) = metric_vec_.at(r, c);
        GaussianRational det = determinant(minor);
        if (!(det.im == 0 && det.re > 0))
            throw AkValidationError(Axiom::MetricSPD,
                                    "leading principal minor " + std::to_string(k) + " is " + exact::to_string(det));
    }
}

void AKManifold::build_metric() {
    int n = algebra_.dimension;
    gram1_ = inverse(metric_vec_);
    gram_.clear();
    for (int k = 0; k <= n; ++k) gram_.push_back(space_->compound_gram(gram1_, k));

    volume_ = exterior::wedge_power(omega_, half_dim());
    Rational fact = 1;
    for (int i = 2; i <= half_dim(); ++i) fact *= i;
    volume_ = GaussianRational(Rational(1) / fact) * volume_;
    volume_coeff_ = volume_.terms().begin()->second.re;
    // compatibility: the symplectic volume is a unit metric volume
    GaussianRational vv = ExteriorSpace::inner(space_->to_vector(volume_, n), space_->to_vector(volume_, n), gram_[n]);
    if (!(vv == GaussianRational(1)))
        throw ConsistencyError("omega^n/n! is not unit-norm against the derived metric");
}

void AKManifold::build_bigrading() {
    int n = algebra_.dimension;
    int half = half_dim();
    // pullback action on 1-form coefficient vectors: (J a)(X) = a(JX)  =>  a -> J^T a
    ExactMatrix dual = j_.transpose();
    ExactMatrix idn = ExactMatrix::identity(n);
    ExactMatrix e_plus = nullspace_matrix(dual - gauss_i() * idn);   // (1,0) forms
    ExactMatrix e_minus = nullspace_matrix(dual + gauss_i() * idn);  // (0,1) forms
    if (static_cast<int>(e_plus.cols()) != half || static_cast<int>(e_minus.cols()) != half)
        throw ConsistencyError("dual J eigenspaces do not split evenly");

    // assemble the (p,q) wedge basis inside each complexified degree
    struct Tagged { ExactMatrix basis; std::vector<std::pair<int, int>> tags; };
    std::vector<Tagged> table(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<ExactMatrix> cols;
        std::vector<std::pair<int, int>> tags;
        for (int p = 0; p <= k; ++p) {
            int q = k - p;
            if (p > half || q > half) continue;
            // all p-subsets of e_plus columns wedged with q-subsets of e_minus
            std::vector<std::vector<int>> psets, qsets;
            auto subsets = [](int total, int take) {
                std::vector<std::vector<int>> out;
                std::vector<int> pick(take);
                for (int i = 0; i < take; ++i) pick[i] = i;
                while (true) {
                    out.push_back(pick);
                    if (take == 0) break;
                    int i = take - 1;
                    while (i >= 0 && pick[i] == total - take + i) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j = i + 1; j < take; ++j) pick[j] = pick[j - 1] + 1;
                }
                return out;
            };
            psets = subsets(half, p);
            qsets = subsets(half, q);
            for (const auto& ps : psets)
                for (const auto& qs : qsets) {
                    FormValue f(n);
                    f.add_term(IndexMonomial{}, GaussianRational(1));
                    for (int i : ps) f = exterior::wedge(f, space_->to_form(e_plus.col_slice({static_cast<std::size_t>(i)}), 1));
                    for (int i : qs) f = exterior::wedge(f, space_->to_form(e_minus.col_slice({static_cast<std::size_t>(i)}), 1));
                    cols.push_back(space_->to_vector(f, k));
                    tags.emplace_back(p, q);
                }
        }
        table[k].basis = ExactMatrix::hstack(cols);
        table[k].tags = std::move(tags);
    }

    // projections and the calligraphic J
    for (int p = 0; p <= half; ++p)
        for (int q = 0; q <= half; ++q)
            projections_.emplace(std::make_pair(p, q),
                                 GradedOperator::zero("Pi^{" + std::to_string(p) + "," + std::to_string(q) + "}",
                                                      BidegreeShift{0, 0}, *space_));
    cal_j_ = GradedOperator::zero("calJ", BidegreeShift{0, 0}, *space_);
    for (int k = 0; k <= n; ++k) {
        const auto& [basis, tags] = table[k];
        ExactMatrix binv = inverse(basis);
        for (int p = 0; p <= std::min(k, half); ++p) {
            int q = k - p;
            if (q < 0 || q > half) continue;
            std::vector<std::size_t> sel;
            for (std::size_t c = 0; c < tags.size(); ++c)
                if (tags[c] == std::make_pair(p, q)) sel.push_back(c);
            ExactMatrix tp = basis.col_slice(sel);
            ExactMatrix rows(sel.size(), basis.cols());
            for (std::size_t r = 0; r < sel.size(); ++r)
                for (std::size_t c = 0; c < basis.cols(); ++c) rows.at(r, c) = binv.at(sel[r], c);
            ExactMatrix proj = tp * rows;
            projections_.at({p, q}).block(k) = proj;
            pq_bases_[{p, q}] = tp;
            // i^{p-q} factor
            GaussianRational factor(1);
            int e = ((p - q) % 4 + 4) % 4;
            for (int t = 0; t < e; ++t) factor *= gauss_i();
            cal_j_.block(k) = cal_j_.block(k) + factor * proj;
        }
    }
    // identity resolution and idempotency
    for (int k = 0; k <= n; ++k) {
        ExactMatrix sum(space_->dim(k), space_->dim(k));
        for (const auto& [pq, proj] : projections_) {
            if (pq.first + pq.second != k) continue;
            const ExactMatrix& b = proj.block(k);
            if (!(b * b == b)) throw ConsistencyError("bigrade projection not idempotent");
            sum = sum + b;
        }
        if (!(sum == ExactMatrix::identity(space_->dim(k))))
            throw ConsistencyError("bigrade projections do not resolve identity");
    }
    cal_j_inv_ = GradedOperator::zero("calJ^{-1}", BidegreeShift{0, 0}, *space_);
    for (int k = 0; k <= n; ++k) cal_j_inv_.block(k) = inverse(cal_j_.block(k));

    // split of d by bidegree shift
    auto split_component = [&](const char* label, int dp, int dq) {
        GradedOperator comp(label, BidegreeShift{dp, dq}, *space_);
        for (int k = 0; k < n; ++k) {
            ExactMatrix acc(space_->dim(k + 1), space_->dim(k));
            for (int p = 0; p <= std::min(k, half); ++p) {
                int q = k - p;
                if (q < 0 || q > half) continue;
                int pp = p + dp, qq = q + dq;
                if (pp < 0 || pp > half || qq < 0 || qq > half) continue;
                acc = acc + projections_.at({pp, qq}).block(k + 1) * (d_.block(k) * projections_.at({p, q}).block(k));
            }
            comp.block(k) = acc;
        }
        return comp;
    };
    mu_ = split_component("mu", 2, -1);
    del_ = split_component("del", 1, 0);
    delbar_ = split_component("delbar", 0, 1);
    mubar_ = split_component("mubar", -1, 2);
    GradedOperator sum = mu_ + del_ + delbar_ + mubar_;
    if (!sum.equal_blocks(d_)) throw ConsistencyError("mu+del+delbar+mubar != d");

    d_adj_ = adjoint(d_);
    mu_adj_ = adjoint(mu_);
    del_adj_ = adjoint(del_);
    delbar_adj_ = adjoint(delbar_);
    mubar_adj_ = adjoint(mubar_);
}

void AKManifold::build_stars() {
    int n = algebra_.dimension;
    ExactMatrix poisson = inverse(omega_matrix_);
    star_.blocks.clear();
    star_s_.blocks.clear();
    for (int k = 0; k <= n; ++k) {
        int kk = n - k;
        ExactMatrix s(space_->dim(kk), space_->dim(k));
        ExactMatrix ss(space_->dim(kk), space_->dim(k));
        ExactMatrix wk = space_->compound_gram(poisson, k);  // Poisson pairing on Λ^k
        const ExactMatrix& gk = gram_[k];
        for (int j = 0; j < space_->dim(k); ++j)
            for (int a = 0; a < space_->dim(k); ++a) {
                const IndexMonomial& ma = space_->basis(k)[a];
                int comp_idx = space_->index_of(space_->complement(ma));
                GaussianRational denom(Rational(space_->complement_sign(ma)));
                // e_I ∧ (*e_J) = G_k[I,J] vol   and   e_I ∧ (*_s e_J) = W_k[I,J] vol
                s.at(comp_idx, j) = gk.at(a, j) * GaussianRational(volume_coeff_) / denom;
                ss.at(comp_idx, j) = wk.at(a, j) * GaussianRational(volume_coeff_) / denom;
            }
        star_.blocks.push_back(std::move(s));
        star_s_.blocks.push_back(std::move(ss));
    }
    for (int k = 0; k <= n; ++k) {
        int sign = (k * (2 * half_dim() - k)) % 2 == 0 ? 1 : -1;
        if (!(star_.block(n - k) * star_.block(k) == GaussianRational(Rational(sign)) * ExactMatrix::identity(space_->dim(k))))
            throw ConsistencyError("star.star != (-1)^{k(2n-k)} in degree " + std::to_string(k));
        if (!(star_s_.block(n - k) * star_s_.block(k) == ExactMatrix::identity(space_->dim(k))))
            throw ConsistencyError("symplectic star is not an involution in degree " + std::to_string(k));
    }
}

void AKManifold::build_lefschetz() {
    int n = algebra_.dimension;
    lef_l_ = GradedOperator("L", BidegreeShift{1, 1}, *space_);
    for (int k = 0; k + 2 <= n; ++k) lef_l_.block(k) = space_->wedge_matrix(omega_, k);

    lef_lambda_ = GradedOperator("Lambda", BidegreeShift{-1, -1}, *space_);
    for (int k = 2; k <= n; ++k)
        lef_lambda_.block(k) = inverse(star_.block(k - 2)) * (lef_l_.block(n - k) * star_.block(k));
    GradedOperator lam_gram = adjoint(lef_l_);
    if (!lef_lambda_.equal_blocks(lam_gram))
        throw ConsistencyError("Lambda via star conjugation differs from the gram adjoint of L");

    counting_h_ = GradedOperator("H", BidegreeShift{0, 0}, *space_);
    for (int k = 0; k <= n; ++k)
        counting_h_.block(k) = GaussianRational(Rational(half_dim() - k)) * ExactMatrix::identity(space_->dim(k));
}

void AKManifold::build_d_lambda() {
    int n = algebra_.dimension;
    d_lambda_ = graded_commutator(d_, lef_lambda_, *space_);
    d_lambda_.set_label("dLambda");

    // -*(calJ^{-1}) d (calJ) *  must reproduce [d, Lambda]
    for (int k = 1; k <= n; ++k) {
        ExactMatrix route = -(star_.block(n - k + 1) *
                              (cal_j_inv_.block(n - k + 1) * (d_.block(n - k) * (cal_j_.block(n - k) * star_.block(k)))));
        if (!(route == d_lambda_.block(k)))
            throw ConsistencyError("dLambda = -*J^{-1}dJ* fails in degree " + std::to_string(k));
    }
    // adjoint: J^{-1} d J = [L, d*] = gram adjoint of dLambda
    d_lambda_adj_ = GradedOperator("dLambda*", BidegreeShift{0, 1}, *space_);
    for (int k = 0; k < n; ++k)
        d_lambda_adj_.block(k) = cal_j_inv_.block(k + 1) * (d_.block(k) * cal_j_.block(k));
    GradedOperator via_comm = graded_commutator(lef_l_, d_adj_, *space_);
    if (!d_lambda_adj_.equal_blocks(via_comm))
        throw ConsistencyError("dLambda* = [L, d*] fails");
    GradedOperator via_gram = adjoint(d_lambda_);
    if (!d_lambda_adj_.equal_blocks(via_gram))
        throw ConsistencyError("dLambda* is not the gram adjoint of dLambda");
}

void AKManifold::build_nijenhuis() {
    int n = algebra_.dimension;
    nijenhuis_.value.assign(n, std::vector<ExactMatrix>(n, ExactMatrix(n, 1)));
    auto basis_vec = [&](int i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    auto apply_j = [&](const std::vector<Rational>& v) {
        std::vector<Rational> out(n, Rational(0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) out[r] += j_.at(r, c).re * v[c];
        return out;
    };
    auto add_scaled = [&](std::vector<Rational>& acc, const std::vector<Rational>& v, const Rational& s) {
        for (int t = 0; t < n; ++t) acc[t] += s * v[t];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto x = basis_vec(i), y = basis_vec(j);
            std::vector<Rational> acc(n, Rational(0));
            add_scaled(acc, algebra_.bracket(x, y), 1);
            add_scaled(acc, apply_j(algebra_.bracket(x, apply_j(y))), 1);
            add_scaled(acc, apply_j(algebra_.bracket(apply_j(x), y)), 1);
            add_scaled(acc, algebra_.bracket(apply_j(x), apply_j(y)), -1);
            for (int t = 0; t < n; ++t) {
                nijenhuis_.value[i][j].at(t, 0) = GaussianRational(acc[t]);
                if (acc[t] != 0) nijenhuis_.vanishes = false;
            }
        }

    // measure the derivation factor against mu+mubar on 1-forms
    GradedOperator mm = mu_ + mubar_;
    bool found = false;
    Rational factor = 0;
    for (int t = 1; t <= n && !found; ++t) {
        // alpha_t ∘ N as a 2-form
        FormValue an(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                GaussianRational v = nijenhuis_.value[i - 1][j - 1].at(t - 1, 0);
                if (!v.is_zero()) an.add_term(IndexMonomial{{i, j}}, v);
            }
        if (an.is_zero()) continue;
        ExactMatrix lhs = mm.block(1).col_slice({static_cast<std::size_t>(t - 1)});
        ExactMatrix rhs = space_->to_vector(an, 2);
        // lhs = factor * rhs entrywise, exact
        for (std::size_t r = 0; r < rhs.rows() && !found; ++r)
            if (!rhs.at(r, 0).is_zero()) {
                GaussianRational f = lhs.at(r, 0) / rhs.at(r, 0);
                if (f.im != 0) throw ConsistencyError("Nijenhuis derivation factor is not real");
                factor = f.re;
                found = true;
            }
    }
    nijenhuis_.factor_defined = found;
    if (found) {
        nijenhuis_.factor = factor;
        // the same factor must work on every 1-form basis element
        for (int t = 1; t <= n; ++t) {
            FormValue an(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    GaussianRational v = nijenhuis_.value[i - 1][j - 1].at(t - 1, 0);
                    if (!v.is_zero()) an.add_term(IndexMonomial{{i, j}}, v);
                }
            ExactMatrix lhs = mm.block(1).col_slice({static_cast<std::size_t>(t - 1)});
            ExactMatrix rhs = GaussianRational(factor) * space_->to_vector(an, 2);
            if (!(lhs == rhs))
                throw ConsistencyError("(mu+mubar) != factor * (N⊗Id)* on 1-forms");
        }
    }
    // three-way integrability agreement: N = 0 <=> mu = 0 <=> mubar = 0
    bool mu_zero = mu_.is_zero(), mubar_zero = mubar_.is_zero();
    if (nijenhuis_.vanishes != mu_zero || mu_zero != mubar_zero)
        throw ConsistencyError("integrability detectors disagree (N vs mu vs mubar)");
}

const GradedOperator& AKManifold::bigrade_projection(int p, int q) const {
    if (p < 0 || q < 0 || p > half_dim() || q > half_dim())
        throw std::out_of_range("bigrade_projection: (p,q) out of range");
    return projections_.at({p, q});
}

const ExactMatrix& AKManifold::pq_basis(int p, int q) const {
    auto it = pq_bases_.find({p, q});
    if (it == pq_bases_.end()) throw std::out_of_range("pq_basis: (p,q) out of range");
    return it->second;
}

GradedOperator AKManifold::adjoint(const GradedOperator& op) const {
    return gram_adjoint(op, gram_, *space_);
}

}  // namespace ak::structure
