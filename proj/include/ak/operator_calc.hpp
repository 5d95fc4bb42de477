#pragma once

#include <string>
#include <vector>

#include "ak/manifold.hpp"

namespace ak::opcalc {

using structure::AKManifold;
using structure::DualityOperator;

// delta delta* + delta* delta, degree-0 blocks. Uses the manifold's gram
// adjoint.
GradedOperator laplacian(const AKManifold& m, const GradedOperator& op);

struct IdentityCheck {
    std::string id;       // stable identifier, e.g. "P2.6.4d"
    std::string anchor;   // human-readable statement, e.g. "[Lambda,del] = i delbar*"
    bool pass = false;
    std::string max_defect;  // entry of the defect matrix when failing
};

struct IdentitySuiteReport {
    std::string manifold;
    std::vector<IdentityCheck> checks;
    bool all_pass = true;

    void add(IdentityCheck c) {
        all_pass = all_pass && c.pass;
        checks.push_back(std::move(c));
    }
};

// Every machine-checkable operator identity: the seven d^2 relations, the
// sixteen commutator identities with L and Lambda, the mixed-adjoint
// commutator identities, the Laplacian relations (including
// Delta_{delbar+mu} = Delta_{del+mubar} = (Delta_d + Delta_dLambda)/4 and its
// degree-1 specialization), dLambda alternate constructions, symplectic-star
// relations, sl2, star-conjugation adjoint formulas, the Nijenhuis derivation
// identity, restricted [d*,L^l] identities on harmonic bases, and graded
// Jacobi samples. All comparisons are exact matrix equalities.
IdentitySuiteReport identity_suite(const AKManifold& m);

struct DecompositionCheck {
    int degree = 0;
    int kernel_dim = 0;
    int image_dim = 0;
    bool dims_sum = false;       // kernel + image = dim Λ^k
    bool orthogonal = false;     // kernel ⟂ image under the gram product
    ExactMatrix kernel_basis;
    ExactMatrix image_basis;
};

// ker ⊕ im decomposition of a self-adjoint degree-0 operator in degree k.
// Rejects non-self-adjoint input.
DecompositionCheck orthogonal_decomposition_check(const AKManifold& m, const GradedOperator& op, int k);

// L^power as a graded operator (power >= 0).
GradedOperator lefschetz_power(const AKManifold& m, int power);

}  // namespace ak::opcalc
