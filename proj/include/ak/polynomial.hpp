#pragma once

#include <string>
#include <vector>

#include "ak/matrix.hpp"
#include "ak/rational.hpp"

namespace ak::exact {

// Univariate polynomial with rational coefficients, ascending order.
// Trailing zero coefficients are trimmed; the zero polynomial has no
// coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial from_roots_monic(const std::vector<Rational>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;

    Polynomial derivative() const;
    // Divides out content, making coefficients integral and primitive with a
    // positive leading coefficient preserved in sign.
    Polynomial primitive_part() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Euclidean division: returns (quotient, remainder).
    static std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a, const Polynomial& b);

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic gcd

// Yun squarefree decomposition: factors[i] has multiplicity i+1 in the input;
// product of factors[i]^(i+1) equals the input up to a constant.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// Exact real algebraic number: either a rational value or an open isolating
// interval (lo, hi) around a single irrational root of `poly` (squarefree).
struct RealAlgebraicRoot {
    enum class Kind { ExactRational, Isolated };
    Kind kind = Kind::ExactRational;
    Rational value;          // when exact
    Rational lo, hi;         // when isolated: lo < root < hi, sign(lo)==sign(hi)
    unsigned multiplicity = 1;
    Polynomial poly;         // squarefree polynomial owning the isolated root

    static RealAlgebraicRoot exact(Rational v, unsigned mult = 1);

    // -1, 0, +1; certified by the interval or the exact value.
    int sign() const;
    // Upper/lower rational bounds of the root.
    const Rational& lower() const { return kind == Kind::ExactRational ? value : lo; }
    const Rational& upper() const { return kind == Kind::ExactRational ? value : hi; }
    // Shrink the isolating interval to width <= w (no-op for exact roots).
    void refine(const Rational& w);
    std::string str() const;
};

// Strict order on real algebraic roots; refines both as needed.
bool root_less(RealAlgebraicRoot a, RealAlgebraicRoot b);

// All real roots of p with multiplicity. Rational roots are recognized
// exactly; irrational ones are isolated by Sturm bisection to width <= width.
// Throws std::invalid_argument on the zero polynomial or width <= 0.
std::vector<RealAlgebraicRoot> isolate_real_roots(const Polynomial& p, const Rational& width);

// Number of distinct real roots of p in (a, b], from the Sturm chain of p.
int sturm_count(const Polynomial& p, const Rational& a, const Rational& b);

// Characteristic polynomial det(xI - m) with GaussianRational coefficients
// (monic, ascending order). Rejects non-square input.
std::vector<GaussianRational> char_poly(const ExactMatrix& m);

// Converts complex coefficients with vanishing imaginary parts into a real
// polynomial; throws std::domain_error if any imaginary part is nonzero.
Polynomial to_real_polynomial(const std::vector<GaussianRational>& coeffs);

// The unique rational with smallest denominator (then smallest numerator
// magnitude) in the closed interval [lo, hi]. Stern-Brocot descent.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace ak::exact
