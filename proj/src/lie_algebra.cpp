#include "ak/lie_algebra.hpp"

#include <stdexcept>

namespace ak::lie {

using exact::GaussianRational;
using exterior::IndexMonomial;
using opcalc::BidegreeShift;
using opcalc::GradedOperator;

std::vector<Rational> LieAlgebraData::bracket(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
    std::vector<Rational> out(dimension, Rational(0));
    for (const auto& [ij, terms] : brackets) {
        auto [i, j] = ij;
        Rational coeff = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
        if (coeff == 0) continue;
        for (const auto& [k, c] : terms) out[k - 1] += coeff * c;
    }
    return out;
}

ValidationReport validate_lie_algebra(const LieAlgebraData& data) {
    ValidationReport report;
    int n = data.dimension;
    auto basis = [&](int i) {
        std::vector<Rational> v(n, Rational(0));
        v[i - 1] = 1;
        return v;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                auto t1 = data.bracket(data.bracket(basis(i), basis(j)), basis(k));
                auto t2 = data.bracket(data.bracket(basis(j), basis(k)), basis(i));
                auto t3 = data.bracket(data.bracket(basis(k), basis(i)), basis(j));
                std::vector<Rational> defect(n, Rational(0));
                bool zero = true;
                for (int t = 0; t < n; ++t) {
                    defect[t] = t1[t] + t2[t] + t3[t];
                    if (defect[t] != 0) zero = false;
                }
                if (!zero) {
                    report.ok = false;
                    report.failures.push_back({i, j, k, std::move(defect)});
                }
            }
    return report;
}

std::vector<FormValue> ce_one_form_images(const LieAlgebraData& data) {
    int n = data.dimension;
    std::vector<FormValue> out(n + 1, FormValue(n));
    for (const auto& [ij, terms] : data.brackets) {
        auto [i, j] = ij;
        for (const auto& [k, c] : terms)
            out[k].add_term(IndexMonomial{{i, j}}, GaussianRational(-c));
    }
    return out;
}

GradedOperator ce_differential(const LieAlgebraData& data, const ExteriorSpace& space) {
    if (!validate_lie_algebra(data).ok)
        throw std::invalid_argument("ce_differential: Jacobi identity fails");
    GradedOperator d = opcalc::derivation_from_one_forms(ce_one_form_images(data), space, "d");
    // d∘d = 0 entrywise in every degree; equivalent to Jacobi, asserted anyway.
    GradedOperator dd = compose(d, d, space);
    if (!dd.is_zero()) throw std::logic_error("ce_differential: d^2 != 0 despite Jacobi");
    return d;
}

}  // namespace ak::lie
