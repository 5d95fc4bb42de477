#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ak/catalog.hpp"
#include "ak/operator_calc.hpp"

using namespace ak;
using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Rational;
using exterior::FormValue;
using exterior::IndexMonomial;
using structure::AKManifold;
using structure::AkValidationError;
using structure::Axiom;

namespace {

FormValue mono(int n, std::vector<int> idx, Rational c = 1) {
    FormValue f(n);
    auto canon = exterior::canonical_monomial(std::move(idx));
    f.add_term(canon->second, GaussianRational(Rational(canon->first) * c));
    return f;
}

AKManifold kt() { return catalog::builtin("kodaira_thurston"); }
AKManifold t4() { return catalog::builtin("torus4"); }

}  // namespace

TEST_CASE("catalog manifolds validate") {
    CHECK_NOTHROW(kt());
    CHECK_NOTHROW(t4());
    CHECK_NOTHROW(catalog::builtin("torus6"));
}

TEST_CASE("degenerate omega is rejected") {
    auto man = catalog::builtin_manifest("kodaira_thurston");
    man.omega = mono(4, {1, 2});  // omega^2 = 0
    try {
        catalog::build_manifold(man);
        FAIL("expected rejection");
    } catch (const AkValidationError& e) {
        CHECK(e.axiom() == Axiom::OmegaNondegenerate);
    }
}

TEST_CASE("non-closed omega is rejected") {
    auto man = catalog::builtin_manifest("kodaira_thurston");
    // a1 ∧ a2 + a3 ∧ a4 is nondegenerate but not closed here: d(a1^a2) = -a1^(-a1^a4) = 0,
    // d(a3^a4)=0 ... use a2-bearing term that fails: a2 ∧ a3: d = -(d a2)^a3? sign aside, nonzero.
    man.omega = mono(4, {2, 3}) + mono(4, {1, 4});
    CHECK_THROWS_AS(catalog::build_manifold(man), AkValidationError);
}

TEST_CASE("J^2 != -I is rejected") {
    auto man = catalog::builtin_manifest("torus4");
    man.j = ExactMatrix::identity(4);
    try {
        catalog::build_manifold(man);
        FAIL("expected rejection");
    } catch (const AkValidationError& e) {
        CHECK(e.axiom() == Axiom::JSquare);
    }
}

TEST_CASE("sign-flipped J makes the metric negative definite and is rejected") {
    auto man = catalog::builtin_manifest("kodaira_thurston");
    man.j = -man.j;
    try {
        catalog::build_manifold(man);
        FAIL("expected rejection");
    } catch (const AkValidationError& e) {
        CHECK(e.axiom() == Axiom::MetricSPD);
    }
}

TEST_CASE("omega that is not J-invariant is rejected") {
    auto man = catalog::builtin_manifest("torus4");
    man.omega = mono(4, {1, 2}) + mono(4, {3, 4}) + mono(4, {1, 3});
    CHECK_THROWS_AS(catalog::build_manifold(man), AkValidationError);
}

TEST_CASE("derived metric is the identity on the catalog frames") {
    CHECK(kt().metric_on_vectors() == ExactMatrix::identity(4));
    CHECK(t4().metric_on_vectors() == ExactMatrix::identity(4));
    // hence the monomial basis is orthonormal in every degree
    AKManifold m = kt();
    for (int k = 0; k <= 4; ++k)
        CHECK(m.gram(k) == ExactMatrix::identity(m.space().dim(k)));
}

TEST_CASE("bigrade projections resolve the identity and tag omega as (1,1)") {
    AKManifold m = kt();
    ExactMatrix omv = m.space().to_vector(m.omega(), 2);
    CHECK(m.bigrade_projection(1, 1).block(2) * omv == omv);
    ExactMatrix sum(6, 6);
    for (int p = 0; p <= 2; ++p) {
        int q = 2 - p;
        sum = sum + m.bigrade_projection(p, q).block(2);
    }
    CHECK(sum == ExactMatrix::identity(6));
    CHECK_THROWS_AS(m.bigrade_projection(3, 0), std::out_of_range);
}

TEST_CASE("Pi^{1,0} a1 has norm squared 1/2") {
    AKManifold m = kt();
    ExactMatrix a1(4, 1);
    a1.at(0, 0) = GaussianRational(1);
    ExactMatrix p = m.bigrade_projection(1, 0).block(1) * a1;
    GaussianRational nrm = exterior::ExteriorSpace::inner(p, p, m.gram(1));
    CHECK(nrm == GaussianRational(Rational(1, 2)));
    // component along a1 is 1/2 and the partner lives on a3
    CHECK(p.at(0, 0) == GaussianRational(Rational(1, 2)));
    CHECK(p.at(2, 0).norm_sq() == Rational(1, 4));
}

TEST_CASE("the split of d reproduces the printed mu+mubar values") {
    AKManifold m = kt();
    opcalc::GradedOperator mm = m.mu() + m.mubar();
    auto apply1 = [&](int i) {
        ExactMatrix v(4, 1);
        v.at(i - 1, 0) = GaussianRational(1);
        return m.space().to_form(mm.block(1) * v, 2);
    };
    CHECK(apply1(1).is_zero());
    CHECK(apply1(3).is_zero());
    // (mu+mubar) a2 = 1/4 (a2∧a3 - a1∧a4)
    CHECK(apply1(2) == GaussianRational(Rational(1, 4)) * (mono(4, {2, 3}) - mono(4, {1, 4})));
    // (mu+mubar) a4 = 1/4 (a3∧a4 - a1∧a2)
    CHECK(apply1(4) == GaussianRational(Rational(1, 4)) * (mono(4, {3, 4}) - mono(4, {1, 2})));
}

TEST_CASE("the torus split vanishes entirely") {
    AKManifold m = t4();
    CHECK(m.mu().is_zero());
    CHECK(m.del().is_zero());
    CHECK(m.delbar().is_zero());
    CHECK(m.mubar().is_zero());
}

TEST_CASE("hodge star basics") {
    AKManifold m = kt();
    // *1 = omega^2/2 (the volume form)
    ExactMatrix one(1, 1);
    one.at(0, 0) = GaussianRational(1);
    CHECK(m.space().to_form(m.hodge_star().block(0) * one, 4) == m.volume());
    // ** = -1 on 1-forms in dimension 4
    CHECK(m.hodge_star().block(3) * m.hodge_star().block(1) == -ExactMatrix::identity(4));
    // *(a1∧a2) = ±a3∧a4 with the sign fixed by the defining pairing; here the
    // volume coefficient of e1234 is -1, so the sign is -1
    ExactMatrix a12 = m.space().to_vector(mono(4, {1, 2}), 2);
    CHECK(m.space().to_form(m.hodge_star().block(2) * a12, 2) == mono(4, {3, 4}, Rational(-1)));
    // defining relation holds for that pair
    FormValue lhs = exterior::wedge(mono(4, {1, 2}), mono(4, {3, 4}, Rational(-1)));
    CHECK(lhs == m.volume());
}

TEST_CASE("lefschetz operators") {
    AKManifold torus = t4();
    // Lambda(omega) = n = 2 on T^4
    ExactMatrix omv = torus.space().to_vector(torus.omega(), 2);
    ExactMatrix lam = torus.lefschetz_lambda().block(2) * omv;
    CHECK(lam.at(0, 0) == GaussianRational(2));
    // degree <= 1 forms are all primitive
    CHECK(torus.lefschetz_lambda().block(1).rows() == 0);
    // Kodaira-Thurston: Omega^2 = L P^0 ⊕ P^2 with dims 1 + 5
    AKManifold m = kt();
    CHECK(nullspace_matrix(m.lefschetz_lambda().block(2)).cols() == 5);
    CHECK(rank(m.lefschetz_l().block(0)) == 1);
}

TEST_CASE("cal J basics") {
    AKManifold m = kt();
    ExactMatrix omv = m.space().to_vector(m.omega(), 2);
    CHECK(m.cal_j().block(2) * omv == omv);
    CHECK(m.cal_j().block(1) * m.cal_j().block(1) == -ExactMatrix::identity(4));
    // real rational entries on 1-forms
    CHECK(m.cal_j().block(1).is_real());
}

TEST_CASE("d lambda facts") {
    AKManifold m = kt();
    // dLambda omega = 0 (omega closed with constant Lambda omega)
    ExactMatrix omv = m.space().to_vector(m.omega(), 2);
    CHECK((m.d_lambda().block(2) * omv).is_zero());
    CHECK(t4().d_lambda().is_zero());
    // Delta_{dLambda} a4 = a4: a4 is d-harmonic but not dLambda-harmonic
    opcalc::GradedOperator lap = opcalc::laplacian(m, m.d_lambda());
    ExactMatrix a4(4, 1);
    a4.at(3, 0) = GaussianRational(1);
    CHECK(lap.block(1) * a4 == a4);
    CHECK(!(m.d_lambda_adj().block(1) * a4).is_zero());
}

TEST_CASE("symplectic star facts") {
    AKManifold m = t4();
    // *_s 1 = omega^n/n!
    ExactMatrix one(1, 1);
    one.at(0, 0) = GaussianRational(1);
    CHECK(m.space().to_form(m.symplectic_star().block(0) * one, 4) == m.volume());
    // primitive 1-form B on T^4: *_s B = -L B
    for (int i = 1; i <= 4; ++i) {
        ExactMatrix b(4, 1);
        b.at(i - 1, 0) = GaussianRational(1);
        CHECK(m.symplectic_star().block(1) * b == -(m.lefschetz_l().block(1) * b));
    }
    // involution on the KT 2-form basis
    AKManifold k = kt();
    CHECK(k.symplectic_star().block(2) * k.symplectic_star().block(2) == ExactMatrix::identity(6));
}

TEST_CASE("adjoints") {
    AKManifold torus = t4();
    CHECK(torus.d_adj().is_zero());
    CHECK(torus.adjoint(torus.lefschetz_l()).equal_blocks(torus.lefschetz_lambda()));
    AKManifold m = kt();
    // delbar* = -* del * entrywise
    for (int k = 1; k <= 4; ++k) {
        ExactMatrix route = -(m.hodge_star().block(4 - k + 1) * (m.del().block(4 - k) * m.hodge_star().block(k)));
        CHECK(route == m.delbar_adj().block(k));
    }
}

TEST_CASE("nijenhuis tensor") {
    AKManifold torus = t4();
    CHECK(torus.nijenhuis().vanishes);
    CHECK(torus.integrable());
    AKManifold m = kt();
    CHECK(!m.integrable());
    // N(xi1, xi2) = +xi4 under the engine conventions (the source example
    // prints -xi4; the discrepancy is carried as a catalog annotation)
    ExactMatrix expect(4, 1);
    expect.at(3, 0) = GaussianRational(1);
    CHECK(m.nijenhuis().value[0][1] == expect);
    CHECK(m.nijenhuis().factor_defined);
    CHECK(m.nijenhuis().factor == Rational(-1, 4));
    // non-integrability detectors agree
    CHECK(!m.mu().is_zero());
    CHECK(!m.mubar().is_zero());
}

TEST_CASE("volume is unit and omega is d-harmonic") {
    for (const char* name : {"torus4", "kodaira_thurston", "torus6"}) {
        AKManifold m = catalog::builtin(name);
        opcalc::GradedOperator lap = opcalc::laplacian(m, m.d());
        ExactMatrix omv = m.space().to_vector(m.omega(), 2);
        CHECK((lap.block(2) * omv).is_zero());
    }
}
