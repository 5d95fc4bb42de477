#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ak/catalog.hpp"
#include "ak/operator_calc.hpp"

using namespace ak;
using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Rational;
using opcalc::GradedOperator;
using structure::AKManifold;

TEST_CASE("graded commutator signs") {
    AKManifold m = catalog::builtin("kodaira_thurston");
    // [L, d] = 0 since omega is closed
    CHECK(opcalc::graded_commutator(m.lefschetz_l(), m.d(), m.space()).is_zero());
    // one of the sixteen L/Lambda commutator identities
    GradedOperator lhs = opcalc::graded_commutator(m.lefschetz_lambda(), m.del(), m.space());
    CHECK(lhs.equal_blocks(exact::gauss_i() * m.delbar_adj()));
    // a mixed-adjoint commutator identity
    CHECK(opcalc::graded_commutator(m.mubar(), m.mu_adj(), m.space()).is_zero());
}

TEST_CASE("laplacians") {
    AKManifold torus = catalog::builtin("torus4");
    CHECK(opcalc::laplacian(torus, torus.d()).is_zero());
    AKManifold m = catalog::builtin("kodaira_thurston");
    GradedOperator lap = opcalc::laplacian(m, m.d());
    ExactMatrix a2(4, 1);
    a2.at(1, 0) = GaussianRational(1);
    CHECK(lap.block(1) * a2 == a2);  // Delta_d a2 = a2
    // kernel of the Laplacian is ker d ∩ ker d*
    for (int k = 0; k <= 4; ++k) {
        ExactMatrix lap_ker = nullspace_matrix(lap.block(k));
        ExactMatrix joint = nullspace_matrix(ExactMatrix::vstack({m.d().block(k), m.d_adj().block(k)}));
        CHECK(exact::same_column_span(lap_ker, joint));
    }
}

TEST_CASE("identity suite passes on every catalog manifold") {
    for (const char* name : {"torus4", "torus6", "kodaira_thurston"}) {
        auto rep = opcalc::identity_suite(catalog::builtin(name));
        if (!rep.all_pass)
            for (const auto& c : rep.checks)
                if (!c.pass) MESSAGE(name, ": ", c.id, " ", c.anchor, " defect ", c.max_defect);
        CHECK(rep.all_pass);
    }
}

TEST_CASE("identity suite covers the expected families") {
    auto rep = opcalc::identity_suite(catalog::builtin("kodaira_thurston"));
    auto has = [&](const std::string& id) {
        for (const auto& c : rep.checks)
            if (c.id == id) return true;
        return false;
    };
    for (const char* id : {"d2.1", "d2.7", "P2.6.4d", "P2.7.3b", "P2.8.1", "P2.8.2(E7)", "P2.8.3",
                           "E11.a", "E11.b", "P5.8", "dLam.sq", "dLam.star", "dLam.sympstar",
                           "symp.invol", "symp.primitive", "sl2.a", "adj.del", "star.isometry",
                           "star.pq", "calJ.sq", "omega.harmonic", "N.derivation", "L4.2.a",
                           "L4.2.b", "jacobi.1", "lap.psd"})
        CHECK_MESSAGE(has(id), id);
}

TEST_CASE("orthogonal decomposition checks") {
    AKManifold torus = catalog::builtin("torus4");
    GradedOperator lap_t = opcalc::laplacian(torus, torus.d());
    auto dec = opcalc::orthogonal_decomposition_check(torus, lap_t, 1);
    CHECK(dec.kernel_dim == 4);
    CHECK(dec.image_dim == 0);
    CHECK(dec.dims_sum);
    CHECK(dec.orthogonal);

    AKManifold m = catalog::builtin("kodaira_thurston");
    GradedOperator sum = opcalc::laplacian(m, m.delbar()) + opcalc::laplacian(m, m.mu());
    auto dec2 = opcalc::orthogonal_decomposition_check(m, sum, 1);
    CHECK(dec2.kernel_dim + dec2.image_dim == 4);
    CHECK(dec2.dims_sum);
    CHECK(dec2.orthogonal);

    // Delta_{delbar+mu} kernel = H^1_d ∩ H^1_dLambda by two independent routes
    GradedOperator dbm = m.delbar() + m.mu();
    GradedOperator lap_dbm = opcalc::laplacian(m, dbm);
    ExactMatrix ker = nullspace_matrix(lap_dbm.block(1));
    GradedOperator lap_d = opcalc::laplacian(m, m.d());
    GradedOperator lap_dl = opcalc::laplacian(m, m.d_lambda());
    ExactMatrix joint = nullspace_matrix(ExactMatrix::vstack({lap_d.block(1), lap_dl.block(1)}));
    CHECK(exact::same_column_span(ker, joint));

    // non-self-adjoint input is rejected
    CHECK_THROWS_AS(opcalc::orthogonal_decomposition_check(m, m.cal_j(), 1), std::invalid_argument);
}

TEST_CASE("graded Jacobi identity on random triples") {
    AKManifold m = catalog::builtin("kodaira_thurston");
    std::vector<GradedOperator> pool{m.del(), m.delbar(), m.mu(), m.mubar(), m.lefschetz_l(),
                                     m.lefschetz_lambda()};
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    auto sgn = [](int a, int b) {
        return (a * b) % 2 == 0 ? GaussianRational(1) : GaussianRational(-1);
    };
    for (int trial = 0; trial < 12; ++trial) {
        const GradedOperator &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
        GradedOperator t1 = sgn(c.degree(), a.degree()) *
                            opcalc::graded_commutator(a, opcalc::graded_commutator(b, c, m.space()), m.space());
        GradedOperator t2 = sgn(a.degree(), b.degree()) *
                            opcalc::graded_commutator(b, opcalc::graded_commutator(c, a, m.space()), m.space());
        GradedOperator t3 = sgn(b.degree(), c.degree()) *
                            opcalc::graded_commutator(c, opcalc::graded_commutator(a, b, m.space()), m.space());
        CHECK((t1 + t2 + t3).is_zero());
    }
}

TEST_CASE("composition shape bookkeeping at the boundary of the complex") {
    AKManifold m = catalog::builtin("torus4");
    // d then d from degree 3: lands outside; the block must be zero-shaped
    GradedOperator dd = opcalc::compose(m.d(), m.d(), m.space());
    CHECK(dd.block(3).rows() == 0);
    CHECK(dd.block(3).cols() == m.space().dim(3));
    GradedOperator lam2 = opcalc::compose(m.lefschetz_lambda(), m.lefschetz_lambda(), m.space());
    CHECK(lam2.block(4).rows() == 1);
}
