#pragma once

#include <map>
#include <string>
#include <vector>

#include "ak/exterior.hpp"
#include "ak/graded_operator.hpp"

namespace ak::lie {

using exact::Rational;
using exterior::ExteriorSpace;
using exterior::FormValue;

// Structure constants of an n-dimensional real Lie algebra:
// [xi_i, xi_j] = sum_k c^k_ij xi_k, stored for i < j only.
struct LieAlgebraData {
    int dimension = 0;
    // (i,j) with i<j  ->  k -> c^k_ij
    std::map<std::pair<int, int>, std::map<int, Rational>> brackets;

    // [u, v] for coefficient vectors over the xi basis.
    std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
};

struct JacobiFailure {
    int i, j, k;                      // offending triple (1-based)
    std::vector<Rational> defect;     // sum of cyclic double brackets
};

struct ValidationReport {
    bool ok = true;
    std::vector<JacobiFailure> failures;
};

// Jacobi identity over all C(n,3) triples; every failing triple is listed
// with its defect vector.
ValidationReport validate_lie_algebra(const LieAlgebraData& data);

// Chevalley-Eilenberg differential with the convention
//   d a(X,Y) = -a([X,Y])   i.e.   d a^k = -sum_{i<j} c^k_ij a^i ∧ a^j,
// extended to all degrees as a +1-derivation. d∘d = 0 is asserted degree by
// degree (it is equivalent to Jacobi). Rejects unvalidated input.
opcalc::GradedOperator ce_differential(const LieAlgebraData& data, const ExteriorSpace& space);

// d restricted to 1-forms as FormValues (d a^k for k = 1..n).
std::vector<FormValue> ce_one_form_images(const LieAlgebraData& data);

}  // namespace ak::lie
