#include "ak/operator_calc.hpp"

#include "ak/pencil.hpp"

namespace ak::opcalc {

using exact::GaussianRational;
using exact::Rational;
using exterior::FormValue;
using exterior::IndexMonomial;

GradedOperator laplacian(const AKManifold& m, const GradedOperator& op) {
    GradedOperator adj = m.adjoint(op);
    GradedOperator lap = compose(adj, op, m.space()) + compose(op, adj, m.space());
    lap.set_label("Delta_" + op.label());
    return lap;
}

GradedOperator lefschetz_power(const AKManifold& m, int power) {
    GradedOperator acc = GradedOperator::identity(m.space());
    for (int i = 0; i < power; ++i) acc = compose(m.lefschetz_l(), acc, m.space());
    acc.set_label("L^" + std::to_string(power));
    return acc;
}

namespace {

std::string first_defect(const GradedOperator& defect) {
    for (int k = 0; k <= defect.dimension(); ++k) {
        const auto& b = defect.block(k);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (!b.at(r, c).is_zero())
                    return "deg " + std::to_string(k) + " entry(" + std::to_string(r) + "," +
                           std::to_string(c) + ") = " + exact::to_string(b.at(r, c));
    }
    return "";
}

struct SuiteBuilder {
    const AKManifold& m;
    IdentitySuiteReport& rep;

    void entry(const std::string& id, const std::string& anchor, const GradedOperator& defect) {
        IdentityCheck c{id, anchor, defect.is_zero(), ""};
        if (!c.pass) c.max_defect = first_defect(defect);
        rep.add(std::move(c));
    }
    void entry_bool(const std::string& id, const std::string& anchor, bool pass, std::string detail = "") {
        rep.add(IdentityCheck{id, anchor, pass, pass ? "" : std::move(detail)});
    }
    void equal(const std::string& id, const std::string& anchor, const GradedOperator& a, const GradedOperator& b) {
        entry(id, anchor, a - b);
    }
};

// star conjugation -(*) partner (*) as a degree -1 operator
GradedOperator minus_star_conj(const AKManifold& m, const GradedOperator& partner) {
    int n = m.dim();
    GradedOperator out("-*" + partner.label() + "*", BidegreeShift{-1, 0}, m.space());
    for (int k = 1; k <= n; ++k)
        out.block(k) = -(m.hodge_star().block(n - k + 1) * (partner.block(n - k) * m.hodge_star().block(k)));
    return out;
}

}  // namespace

IdentitySuiteReport identity_suite(const AKManifold& m) {
    IdentitySuiteReport rep;
    rep.manifold = m.name();
    SuiteBuilder b{m, rep};
    const auto& space = m.space();
    int n2 = m.dim();
    int n = m.half_dim();
    GaussianRational i_unit = exact::gauss_i();

    const GradedOperator &d = m.d(), &mu = m.mu(), &del = m.del(), &delbar = m.delbar(), &mubar = m.mubar();
    const GradedOperator &ds = m.d_adj(), &mus = m.mu_adj(), &dels = m.del_adj(),
                         &delbars = m.delbar_adj(), &mubars = m.mubar_adj();
    const GradedOperator &L = m.lefschetz_l(), &Lam = m.lefschetz_lambda(), &H = m.counting_h();

    auto comm = [&](const GradedOperator& a, const GradedOperator& bb) {
        return graded_commutator(a, bb, space);
    };
    auto cmp = [&](const GradedOperator& a, const GradedOperator& bb) { return compose(a, bb, space); };

    // the split itself and the seven d^2 relations
    b.equal("split.d", "d = mu+del+delbar+mubar", mu + del + delbar + mubar, d);
    b.entry("d2.1", "mu^2 = 0", cmp(mu, mu));
    b.entry("d2.2", "mu del + del mu = 0", cmp(mu, del) + cmp(del, mu));
    b.entry("d2.3", "del^2 + mu delbar + delbar mu = 0", cmp(del, del) + cmp(mu, delbar) + cmp(delbar, mu));
    b.entry("d2.4", "del delbar + delbar del + mu mubar + mubar mu = 0",
            cmp(del, delbar) + cmp(delbar, del) + cmp(mu, mubar) + cmp(mubar, mu));
    b.entry("d2.5", "delbar^2 + mubar del + del mubar = 0", cmp(delbar, delbar) + cmp(mubar, del) + cmp(del, mubar));
    b.entry("d2.6", "mubar delbar + delbar mubar = 0", cmp(mubar, delbar) + cmp(delbar, mubar));
    b.entry("d2.7", "mubar^2 = 0", cmp(mubar, mubar));

    // the sixteen L/Lambda commutator identities
    b.entry("P2.6.1a", "[L,mubar] = 0", comm(L, mubar));
    b.entry("P2.6.1b", "[L,mu] = 0", comm(L, mu));
    b.entry("P2.6.1c", "[Lambda,mubar*] = 0", comm(Lam, mubars));
    b.entry("P2.6.1d", "[Lambda,mu*] = 0", comm(Lam, mus));
    b.entry("P2.6.2a", "[L,delbar] = 0", comm(L, delbar));
    b.entry("P2.6.2b", "[L,del] = 0", comm(L, del));
    b.entry("P2.6.2c", "[Lambda,delbar*] = 0", comm(Lam, delbars));
    b.entry("P2.6.2d", "[Lambda,del*] = 0", comm(Lam, dels));
    b.equal("P2.6.3a", "[L,mubar*] = i mu", comm(L, mubars), i_unit * mu);
    b.equal("P2.6.3b", "[L,mu*] = -i mubar", comm(L, mus), -i_unit * mubar);
    b.equal("P2.6.3c", "[Lambda,mubar] = i mu*", comm(Lam, mubar), i_unit * mus);
    b.equal("P2.6.3d", "[Lambda,mu] = -i mubar*", comm(Lam, mu), -i_unit * mubars);
    b.equal("P2.6.4a", "[L,delbar*] = -i del", comm(L, delbars), -i_unit * del);
    b.equal("P2.6.4b", "[L,del*] = i delbar", comm(L, dels), i_unit * delbar);
    b.equal("P2.6.4c", "[Lambda,delbar] = -i del*", comm(Lam, delbar), -i_unit * dels);
    b.equal("P2.6.4d", "[Lambda,del] = i delbar*", comm(Lam, del), i_unit * delbars);

    // mixed-adjoint commutator identities
    b.entry("P2.7.1a", "[mubar,mu*] = 0", comm(mubar, mus));
    b.entry("P2.7.1b", "[mu,mubar*] = 0", comm(mu, mubars));
    b.equal("P2.7.2a", "[mubar,del*] = [delbar,mu*]", comm(mubar, dels), comm(delbar, mus));
    b.equal("P2.7.2b", "[mu,delbar*] = [del,mubar*]", comm(mu, delbars), comm(del, mubars));
    b.equal("P2.7.3a", "[del,delbar*] = [mubar*,delbar] + [mu,del*]", comm(del, delbars),
            comm(mubars, delbar) + comm(mu, dels));
    b.equal("P2.7.3b", "[delbar,del*] = [mu*,del] + [mubar,delbar*]", comm(delbar, dels),
            comm(mus, del) + comm(mubar, delbars));

    // Laplacian relations
    GradedOperator lap_d = laplacian(m, d);
    GradedOperator lap_mu = laplacian(m, mu), lap_mubar = laplacian(m, mubar);
    GradedOperator lap_del = laplacian(m, del), lap_delbar = laplacian(m, delbar);
    GradedOperator mumubar = mu + mubar;
    mumubar.set_label("mu+mubar");
    GradedOperator lap_mumubar = laplacian(m, mumubar);
    b.equal("P2.8.1", "Delta_{mubar+mu} = Delta_mubar + Delta_mu", lap_mumubar, lap_mubar + lap_mu);
    b.equal("P2.8.2(E7)", "Delta_delbar + Delta_mu = Delta_del + Delta_mubar", lap_delbar + lap_mu,
            lap_del + lap_mubar);
    GradedOperator p283 = lap_delbar + lap_mu + comm(mubar, dels) + comm(mu, delbars) +
                          comm(del, delbars) + comm(delbar, dels);
    b.equal("P2.8.3", "Delta_d = 2(Delta_delbar + Delta_mu + [mubar,del*] + [mu,delbar*] + [del,delbar*] + [delbar,del*])",
            lap_d, GaussianRational(2) * p283);

    GradedOperator dbm = delbar + mu;
    dbm.set_label("delbar+mu");
    GradedOperator dpm = del + mubar;
    dpm.set_label("del+mubar");
    GradedOperator lap_dbm = laplacian(m, dbm), lap_dpm = laplacian(m, dpm);
    GradedOperator lap_dl = laplacian(m, m.d_lambda());
    b.equal("E11.a", "Delta_{delbar+mu} = Delta_{del+mubar}", lap_dbm, lap_dpm);
    b.equal("E11.b", "Delta_{delbar+mu} = (Delta_d + Delta_dLambda)/4", lap_dbm,
            GaussianRational(Rational(1, 4)) * (lap_d + lap_dl));
    {
        ExactMatrix lhs = lap_delbar.block(1) + lap_mu.block(1);
        ExactMatrix rhs = GaussianRational(Rational(1, 4)) * (lap_d.block(1) + lap_dl.block(1));
        b.entry_bool("P5.8", "(Delta_delbar + Delta_mu)|_1 = (Delta_d + Delta_dLambda)/4 |_1", lhs == rhs);
    }

    // dLambda routes
    b.entry("dLam.sq", "(dLambda)^2 = 0", cmp(m.d_lambda(), m.d_lambda()));
    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= n2; ++k) {
            ExactMatrix route = -(m.hodge_star().block(n2 - k + 1) *
                                  (m.cal_j_inv().block(n2 - k + 1) *
                                   (d.block(n2 - k) * (m.cal_j().block(n2 - k) * m.hodge_star().block(k)))));
            if (!(route == m.d_lambda().block(k))) { ok = false; detail = "degree " + std::to_string(k); break; }
        }
        b.entry_bool("dLam.star", "dLambda = -* J^{-1} d J *", ok, detail);
    }
    b.equal("dLam.adj.comm", "dLambda* = [L, d*]", m.d_lambda_adj(), comm(L, ds));
    b.equal("dLam.adj.gram", "dLambda* = gram adjoint of dLambda", m.d_lambda_adj(), m.adjoint(m.d_lambda()));
    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= n2; ++k) {
            int sign = (k + 1) % 2 == 0 ? 1 : -1;
            ExactMatrix route = GaussianRational(Rational(sign)) *
                                (m.symplectic_star().block(n2 - k + 1) *
                                 (d.block(n2 - k) * m.symplectic_star().block(k)));
            if (!(route == m.d_lambda().block(k))) { ok = false; detail = "degree " + std::to_string(k); break; }
        }
        b.entry_bool("dLam.sympstar", "dLambda = (-1)^{k+1} *_s d *_s", ok, detail);
    }

    // symplectic star
    {
        bool ok = true;
        for (int k = 0; k <= n2; ++k)
            ok = ok && m.symplectic_star().block(n2 - k) * m.symplectic_star().block(k) ==
                           ExactMatrix::identity(space.dim(k));
        b.entry_bool("symp.invol", "*_s *_s = id", ok);
    }
    {
        // on primitive forms: *_s B = (-1)^{k(k+1)/2} L^{n-k} B / (n-k)!
        bool ok = true;
        std::string detail;
        for (int k = 0; k <= n && ok; ++k) {
            ExactMatrix prim = k < 2 ? ExactMatrix::identity(space.dim(k))
                                     : nullspace_matrix(m.lefschetz_lambda().block(k));
            if (prim.cols() == 0) continue;
            GradedOperator lp = lefschetz_power(m, n - k);
            Rational fact = 1;
            for (int t = 2; t <= n - k; ++t) fact *= t;
            int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
            ExactMatrix rhs = GaussianRational(Rational(sign) / fact) * (lp.block(k) * prim);
            ExactMatrix lhs = m.symplectic_star().block(k) * prim;
            if (!(lhs == rhs)) { ok = false; detail = "degree " + std::to_string(k); }
        }
        b.entry_bool("symp.primitive", "*_s B = (-1)^{k(k+1)/2} L^{n-k} B/(n-k)! on ker Lambda", ok, detail);
    }

    // sl2 triple (in the orientation that closes: [Lambda,L] = H)
    b.equal("sl2.a", "[Lambda,L] = H", comm(Lam, L), H);
    b.equal("sl2.b", "[H,L] = -2L", comm(H, L), -GaussianRational(2) * L);
    b.equal("sl2.c", "[H,Lambda] = 2Lambda", comm(H, Lam), GaussianRational(2) * Lam);
    b.entry("Ld", "[L,d] = 0", comm(L, d));

    // star-conjugation adjoints
    b.equal("adj.delbar", "delbar* = -* del *", delbars, minus_star_conj(m, del));
    b.equal("adj.del", "del* = -* delbar *", dels, minus_star_conj(m, delbar));
    b.equal("adj.mubar", "mubar* = -* mu *", mubars, minus_star_conj(m, mu));
    b.equal("adj.mu", "mu* = -* mubar *", mus, minus_star_conj(m, mubar));
    b.equal("adj.d", "d* = -* d *", ds, minus_star_conj(m, d));

    // star isometry and bigraded mapping
    {
        bool ok = true;
        for (int k = 0; k <= n2; ++k)
            ok = ok && m.hodge_star().block(k).conj_transpose() * (m.gram(n2 - k) * m.hodge_star().block(k)) ==
                           m.gram(k);
        b.entry_bool("star.isometry", "<*a,*b> = <a,b>", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= n && ok; ++p)
            for (int q = 0; q <= n && ok; ++q) {
                int k = p + q;
                if (k > n2) continue;
                ExactMatrix image = m.hodge_star().block(k) * m.pq_basis(p, q);
                if (image.cols() == 0) continue;
                if (!exact::span_contains(m.pq_basis(n - q, n - p), image)) {
                    ok = false;
                    detail = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
                }
            }
        b.entry_bool("star.pq", "* : Omega^{p,q} -> Omega^{n-q,n-p}", ok, detail);
    }
    {
        bool ok = true;
        for (int k = 0; k <= n2; ++k) {
            int sign = k % 2 == 0 ? 1 : -1;
            ok = ok && m.cal_j().block(k) * m.cal_j().block(k) ==
                           GaussianRational(Rational(sign)) * ExactMatrix::identity(space.dim(k));
        }
        b.entry_bool("calJ.sq", "J^2 = (-1)^k", ok);
    }

    // omega is d-harmonic
    {
        ExactMatrix omv = space.to_vector(m.omega(), 2);
        b.entry_bool("omega.harmonic", "Delta_d omega = 0", (lap_d.block(2) * omv).is_zero());
    }

    // Laplacian kernels agree with joint kernels, and PSD certification
    auto kernel_entry = [&](const std::string& id, const GradedOperator& op, const GradedOperator& lap) {
        GradedOperator adj = m.adjoint(op);
        bool ok = true;
        for (int k = 0; k <= n2 && ok; ++k) {
            ExactMatrix lap_ker = nullspace_matrix(lap.block(k));
            ExactMatrix joint = nullspace_matrix(ExactMatrix::vstack({op.block(k), adj.block(k)}));
            ok = exact::same_column_span(lap_ker, joint);
        }
        b.entry_bool(id, "ker Delta = ker op ∩ ker op*", ok);
    };
    kernel_entry("lap.ker.d", d, lap_d);
    kernel_entry("lap.ker.dLam", m.d_lambda(), lap_dl);
    kernel_entry("lap.ker.dbm", dbm, lap_dbm);
    {
        bool ok = true;
        std::string where;
        for (const GradedOperator* lp : {&lap_d, &lap_dl, &lap_dbm, &lap_mu, &lap_mubar, &lap_del, &lap_delbar})
            for (int k = 0; k <= n2 && ok; ++k) {
                ExactMatrix h = m.gram(k) * lp->block(k);
                if (!h.is_hermitian()) { ok = false; where = lp->label(); break; }
                if (!exact::certify_psd(h).psd) { ok = false; where = lp->label(); break; }
            }
        b.entry_bool("lap.psd", "every Laplacian is self-adjoint PSD against the gram", ok, where);
    }

    // Nijenhuis derivation identity: mu+mubar = f * (N⊗Id)*
    {
        const auto& nd = m.nijenhuis();
        if (!nd.factor_defined) {
            b.entry_bool("N.derivation", "mu+mubar = f*(N⊗Id)* (N = 0 case)", mumubar.is_zero());
        } else {
            std::vector<FormValue> images(static_cast<std::size_t>(n2) + 1, FormValue(n2));
            for (int t = 1; t <= n2; ++t)
                for (int i = 1; i <= n2; ++i)
                    for (int j = i + 1; j <= n2; ++j) {
                        GaussianRational v = nd.value[i - 1][j - 1].at(t - 1, 0);
                        if (!v.is_zero()) images[t].add_term(IndexMonomial{{i, j}}, v);
                    }
            GradedOperator nder = derivation_from_one_forms(images, space, "(N⊗Id)*");
            b.equal("N.derivation", "mu+mubar = (" + exact::to_string(nd.factor) + ")*(N⊗Id)* as derivations",
                    mumubar, GaussianRational(nd.factor) * nder);
        }
        // antisymmetry and N(JX,Y) = -J N(X,Y)
        bool ok = true;
        for (int i = 0; i < n2 && ok; ++i)
            for (int j = 0; j < n2 && ok; ++j) {
                if (!(nd.value[i][j] + nd.value[j][i]).is_zero()) ok = false;
                ExactMatrix jx(n2, 1);
                // N(J e_i, e_j) = sum_r J_ri N(e_r, e_j)
                for (int r = 0; r < n2; ++r)
                    jx = jx + m.j_matrix().at(r, i) * nd.value[r][j];
                if (!(jx + m.j_matrix() * nd.value[i][j]).is_zero()) ok = false;
            }
        b.entry_bool("N.symmetries", "N antisymmetric and N(JX,Y) = -J N(X,Y)", ok);
    }

    // restricted [d*,L^l] and [dLambda,L^l] identities on harmonic bases
    {
        bool ok_a = true, ok_b = true;
        ExactMatrix empty;
        for (int k = 0; k <= n2; ++k) {
            ExactMatrix hd = nullspace_matrix(lap_d.block(k));
            ExactMatrix hdl = nullspace_matrix(lap_dl.block(k));
            for (int l = 1; l <= n; ++l) {
                GradedOperator lp = lefschetz_power(m, l);
                GradedOperator lp1 = lefschetz_power(m, l - 1);
                GradedOperator lhs_a = graded_commutator(ds, lp, space);
                GradedOperator rhs_a = GaussianRational(Rational(-l)) * compose(lp1, m.d_lambda_adj(), space);
                if (!((lhs_a.block(k) - rhs_a.block(k)) * hd).is_zero()) ok_a = false;
                GradedOperator lhs_b = graded_commutator(m.d_lambda(), lp, space);
                GradedOperator rhs_b = GaussianRational(Rational(l)) * compose(lp1, d, space);
                if (!((lhs_b.block(k) - rhs_b.block(k)) * hdl).is_zero()) ok_b = false;
            }
        }
        b.entry_bool("L4.2.a", "[d*,L^l] = -l L^{l-1} dLambda* on d-harmonic forms", ok_a);
        b.entry_bool("L4.2.b", "[dLambda,L^l] = l L^{l-1} d on dLambda-harmonic forms", ok_b);
    }

    // graded Jacobi samples
    {
        auto jacobi = [&](const GradedOperator& A, const GradedOperator& B, const GradedOperator& C) {
            auto sgn = [](int a, int bdeg) { return (a * bdeg) % 2 == 0 ? GaussianRational(1) : GaussianRational(-1); };
            GradedOperator t1 = sgn(C.degree(), A.degree()) * graded_commutator(A, graded_commutator(B, C, space), space);
            GradedOperator t2 = sgn(A.degree(), B.degree()) * graded_commutator(B, graded_commutator(C, A, space), space);
            GradedOperator t3 = sgn(B.degree(), C.degree()) * graded_commutator(C, graded_commutator(A, B, space), space);
            return t1 + t2 + t3;
        };
        b.entry("jacobi.1", "graded Jacobi for (del, delbar, Lambda)", jacobi(del, delbar, Lam));
        b.entry("jacobi.2", "graded Jacobi for (mu, L, del*)", jacobi(mu, L, dels));
        b.entry("jacobi.3", "graded Jacobi for (mubar, Lambda, L)", jacobi(mubar, Lam, L));
    }

    return rep;
}

DecompositionCheck orthogonal_decomposition_check(const AKManifold& m, const GradedOperator& op, int k) {
    if (op.degree() != 0) throw std::invalid_argument("decomposition check needs a degree-0 operator");
    const ExactMatrix& blockk = op.block(k);
    ExactMatrix h = m.gram(k) * blockk;
    if (!h.is_hermitian()) throw std::invalid_argument("operator is not self-adjoint in degree " + std::to_string(k));
    DecompositionCheck out;
    out.degree = k;
    out.kernel_basis = nullspace_matrix(blockk);
    auto piv = rref(blockk).pivot_cols;
    out.image_basis = blockk.col_slice(piv);
    out.kernel_dim = static_cast<int>(out.kernel_basis.cols());
    out.image_dim = static_cast<int>(out.image_basis.cols());
    out.dims_sum = out.kernel_dim + out.image_dim == m.space().dim(k);
    out.orthogonal = out.kernel_basis.cols() == 0 || out.image_basis.cols() == 0 ||
                     (out.kernel_basis.conj_transpose() * (m.gram(k) * out.image_basis)).is_zero();
    return out;
}

}  // namespace ak::opcalc
