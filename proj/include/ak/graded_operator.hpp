#pragma once

#include <map>
#include <optional>
#include <string>

#include "ak/exterior.hpp"

namespace ak::opcalc {

using exact::ExactMatrix;
using exact::GaussianRational;
using exterior::ExteriorSpace;

// Bidegree shift (a,b); operators with a pure degree shift use total() only.
struct BidegreeShift {
    int p = 0;
    int q = 0;
    int total() const { return p + q; }
};

// Per-degree exact matrix blocks of a graded linear operator on the full
// exterior algebra. Block k maps Λ^k -> Λ^{k+shift}; out-of-range blocks are
// zero-shaped. Degree bookkeeping (and hence commutator signs) is exact.
class GradedOperator {
  public:
    GradedOperator() = default;
    GradedOperator(std::string label, BidegreeShift shift, const ExteriorSpace& space);

    static GradedOperator zero(std::string label, BidegreeShift shift, const ExteriorSpace& space);
    static GradedOperator identity(const ExteriorSpace& space);

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    BidegreeShift shift() const { return shift_; }
    int degree() const { return shift_.total(); }
    int dimension() const { return n_; }

    const ExactMatrix& block(int k) const;
    ExactMatrix& block(int k);

    bool is_zero() const;
    // apply to a degree-k coefficient vector
    ExactMatrix apply(const ExactMatrix& v, int k) const;

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator*(const GaussianRational& s, const GradedOperator& a);
    bool equal_blocks(const GradedOperator& other) const;

  private:
    std::string label_;
    BidegreeShift shift_{};
    int n_ = 0;
    std::map<int, ExactMatrix> blocks_;  // keyed by source degree 0..n
};

// a ∘ b (apply b first).
GradedOperator compose(const GradedOperator& a, const GradedOperator& b, const ExteriorSpace& space);

// Graded commutator [A,B] = AB - (-1)^{deg A * deg B} BA.
GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b, const ExteriorSpace& space);

// Gram adjoint: block l of the result is G_{l-shift}^{-1} (block_{l-shift})^H G_l.
GradedOperator gram_adjoint(const GradedOperator& op, const std::vector<ExactMatrix>& gram,
                            const ExteriorSpace& space);

// Extends a degree-+1 map given on the basis 1-forms (images[k] = image of
// e_k, a 2-form; images[0] unused) to the whole exterior algebra as an odd
// derivation vanishing on functions.
GradedOperator derivation_from_one_forms(const std::vector<exterior::FormValue>& images,
                                         const ExteriorSpace& space, const std::string& label);

}  // namespace ak::opcalc
