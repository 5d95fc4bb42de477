#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ak/pencil.hpp"

using namespace ak::exact;

namespace {

const Rational kWidth(1, 1000000);

ExactMatrix diag(std::initializer_list<long> vals) {
    ExactMatrix m(vals.size(), vals.size());
    std::size_t i = 0;
    for (long v : vals) {
        m.at(i, i) = GaussianRational(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("full-space pencil with definite B") {
    ExactMatrix a = GaussianRational(2) * ExactMatrix::identity(2);
    auto r = pencil_min_finite_eigenvalue(a, ExactMatrix::identity(2), ExactMatrix::identity(2),
                                          ExactMatrix::identity(2), kWidth);
    REQUIRE(!r.infinite);
    CHECK(r.value.kind == RealAlgebraicRoot::Kind::ExactRational);
    CHECK(r.value.value == 2);
}

TEST_CASE("vanishing B gives the +infinity sentinel") {
    auto r = pencil_min_finite_eigenvalue(ExactMatrix::identity(2), ExactMatrix::zero(2, 2),
                                          ExactMatrix::identity(2), ExactMatrix::identity(2), kWidth);
    CHECK(r.infinite);
}

TEST_CASE("restriction to a subspace picks the restricted Rayleigh quotient") {
    ExactMatrix a = diag({1, 3});
    ExactMatrix sub(2, 1);
    sub.at(1, 0) = GaussianRational(1);  // span{e2}
    auto r = pencil_min_finite_eigenvalue(a, ExactMatrix::identity(2), ExactMatrix::identity(2), sub, kWidth);
    REQUIRE(!r.infinite);
    CHECK(r.value.value == 3);  // direct Rayleigh quotient on e2
}

TEST_CASE("non-PSD input is rejected with a witness") {
    ExactMatrix a = diag({-1, 1});
    CHECK_THROWS_AS(pencil_min_finite_eigenvalue(a, ExactMatrix::identity(2), ExactMatrix::identity(2),
                                                 ExactMatrix::identity(2), kWidth),
                    std::domain_error);
    auto cert = certify_psd(a);
    REQUIRE(!cert.psd);
    // the witness really has a negative Rayleigh quotient
    GaussianRational q = (cert.witness.conj_transpose() * (a * cert.witness)).at(0, 0);
    CHECK(q.im == 0);
    CHECK(q.re < 0);
}

TEST_CASE("psd certification handles zero diagonal with nonzero row") {
    ExactMatrix h(2, 2);
    h.at(0, 1) = GaussianRational(1);
    h.at(1, 0) = GaussianRational(1);
    auto cert = certify_psd(h);
    REQUIRE(!cert.psd);
    GaussianRational q = (cert.witness.conj_transpose() * (h * cert.witness)).at(0, 0);
    CHECK(q.re < 0);
}

TEST_CASE("mixed kernel directions never cap the constant") {
    // B kills e2; A is positive there, so only the e1 direction binds.
    ExactMatrix a = diag({5, 7});
    ExactMatrix b = diag({1, 0});
    auto r = pencil_min_finite_eigenvalue(a, b, ExactMatrix::identity(2), ExactMatrix::identity(2), kWidth);
    REQUIRE(!r.infinite);
    CHECK(r.value.value == 5);
}

TEST_CASE("value is invariant under change of basis of the subspace") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-3, 3);
    ExactMatrix a = diag({2, 5, 9});
    ExactMatrix b = diag({1, 1, 0});
    // subspace span{e1, e2}
    ExactMatrix sub(3, 2);
    sub.at(0, 0) = GaussianRational(1);
    sub.at(1, 1) = GaussianRational(1);
    auto base = pencil_min_finite_eigenvalue(a, b, ExactMatrix::identity(3), sub, kWidth);
    REQUIRE(!base.infinite);
    for (int trial = 0; trial < 8; ++trial) {
        ExactMatrix t(2, 2);
        do {
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) t.at(r, c) = GaussianRational(Rational(coeff(rng)));
        } while (determinant(t).is_zero());
        auto other = pencil_min_finite_eigenvalue(a, b, ExactMatrix::identity(3), sub * t, kWidth);
        REQUIRE(!other.infinite);
        CHECK(other.value.value == base.value.value);
    }
}

TEST_CASE("non-identity ambient gram") {
    // operator A self-adjoint wrt G: G*A Hermitian. Take G = diag(1,4),
    // A = diag(3, 2): Rayleigh quotients are the diagonal entries.
    ExactMatrix g = diag({1, 4});
    ExactMatrix a = diag({3, 2});
    auto r = pencil_min_finite_eigenvalue(a, ExactMatrix::identity(2), g, ExactMatrix::identity(2), kWidth);
    REQUIRE(!r.infinite);
    CHECK(r.value.value == 2);
}

TEST_CASE("irrational minimum eigenvalue is isolated") {
    // eigenvalues of [[2,1],[1,1]] are (3 ± sqrt 5)/2
    ExactMatrix a(2, 2);
    a.at(0, 0) = GaussianRational(2);
    a.at(0, 1) = GaussianRational(1);
    a.at(1, 0) = GaussianRational(1);
    a.at(1, 1) = GaussianRational(1);
    auto r = pencil_min_finite_eigenvalue(a, ExactMatrix::identity(2), ExactMatrix::identity(2),
                                          ExactMatrix::identity(2), kWidth);
    REQUIRE(!r.infinite);
    CHECK(r.value.kind == RealAlgebraicRoot::Kind::Isolated);
    CHECK(r.value.hi - r.value.lo <= kWidth);
    // bracket (3 - sqrt 5)/2: the defining polynomial is x^2 - 3x + 1
    auto at = [](const Rational& x) { return x * x - 3 * x + 1; };
    CHECK(at(r.value.lo) * at(r.value.hi) < 0);
}
