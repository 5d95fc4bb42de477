#pragma once

#include <optional>
#include <vector>

#include "ak/matrix.hpp"
#include "ak/polynomial.hpp"

namespace ak::exact {

// Result of a positive-semidefiniteness certification of a Hermitian form.
// When psd is false, witness is a column vector with witness^H H witness < 0.
struct PsdCertificate {
    bool psd = false;
    ExactMatrix witness;
};

PsdCertificate certify_psd(const ExactMatrix& hermitian);

struct PencilResult {
    bool infinite = false;          // B vanishes identically on the subspace
    RealAlgebraicRoot value;        // defined when !infinite
};

// sup{ c : A - c*B is PSD on the subspace }, where A and B are operator
// matrices that are self-adjoint PSD with respect to the Hermitian
// positive-definite gram. subspace columns span the restriction domain.
// Directions in ker B never cap c (A is PSD), so the result is the minimum
// finite generalized eigenvalue of the restricted pencil; +infinity when B
// vanishes identically there. Non-PSD inputs are rejected with a
// std::domain_error naming the side that failed (witnessed by a negative
// Rayleigh quotient found during reduction).
PencilResult pencil_min_finite_eigenvalue(const ExactMatrix& a, const ExactMatrix& b,
                                          const ExactMatrix& gram, const ExactMatrix& subspace,
                                          const Rational& width);

}  // namespace ak::exact
