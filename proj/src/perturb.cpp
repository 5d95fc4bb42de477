#include "ak/perturb.hpp"

#include <random>

namespace ak::perturb {

using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Rational;

namespace {

// symplectic transvection x -> x + lambda * omega(x, v) v
ExactMatrix transvection(const ExactMatrix& omega_mat, const std::vector<Rational>& v,
                         const Rational& lambda) {
    std::size_t n = omega_mat.rows();
    ExactMatrix t = ExactMatrix::identity(n);
    // omega(e_c, v) = sum_j omega_mat[c][j] v[j]
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Rational omega_cv = 0;
            for (std::size_t j = 0; j < n; ++j) omega_cv += omega_mat.at(c, j).re * v[j];
            t.at(r, c) += GaussianRational(lambda * omega_cv * v[r]);
        }
    return t;
}

}  // namespace

catalog::ManifoldManifest perturbed_manifest(const catalog::ManifoldManifest& base, unsigned seed) {
    catalog::ManifoldManifest m = base;
    m.name = base.name + "#seed" + std::to_string(seed);
    int n = m.dimension;

    ExactMatrix omega_mat(n, n);
    for (const auto& [mono, c] : m.omega.terms()) {
        omega_mat.at(mono.indices[0] - 1, mono.indices[1] - 1) = c;
        omega_mat.at(mono.indices[1] - 1, mono.indices[0] - 1) = -c;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    ExactMatrix s = ExactMatrix::identity(n);
    int applied = 0;
    while (applied < 3) {
        std::vector<Rational> v(n);
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            v[i] = Rational(num(rng), den(rng));
            if (v[i] != 0) nonzero = true;
        }
        Rational lambda(num(rng), den(rng));
        if (!nonzero || lambda == 0) continue;
        s = s * transvection(omega_mat, v, lambda);
        ++applied;
    }
    ExactMatrix s_inv = inverse(s);
    m.j = s * (m.j * s_inv);

    // positive rational rescaling of omega (J-compatibility is scale invariant)
    Rational scale(den(rng), den(rng));
    m.omega = GaussianRational(scale) * m.omega;

    m.annotations.push_back("seeded compatible perturbation of " + base.name);
    return m;
}

structure::AKManifold perturbed(const std::string& builtin_name, unsigned seed) {
    return catalog::build_manifold(perturbed_manifest(catalog::builtin_manifest(builtin_name), seed));
}

}  // namespace ak::perturb
