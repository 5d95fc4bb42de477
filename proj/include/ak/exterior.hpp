#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ak/matrix.hpp"
#include "ak/rational.hpp"

namespace ak::exterior {

using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Rational;

// Strictly increasing sequence of 1-based basis indices; degree = length.
// Lexicographic order on the index sequence is the canonical basis order
// of each exterior power.
struct IndexMonomial {
    std::vector<int> indices;

    int degree() const { return static_cast<int>(indices.size()); }
    std::string key() const;  // "e1^e3^e4"; "1" for the empty monomial
    friend bool operator==(const IndexMonomial& a, const IndexMonomial& b) {
        return a.indices == b.indices;
    }
    friend bool operator<(const IndexMonomial& a, const IndexMonomial& b) {
        return a.indices < b.indices;
    }
};

// Canonicalize an arbitrary index sequence: (sign, sorted monomial), or
// nullopt when an index repeats (the wedge vanishes).
std::optional<std::pair<int, IndexMonomial>> canonical_monomial(std::vector<int> indices);

// Degree-graded sparse form over a fixed n-dimensional dual basis. Zero
// coefficients are never stored. Mixed degrees are allowed.
class FormValue {
  public:
    FormValue() = default;
    explicit FormValue(int dimension) : n_(dimension) {}

    int dimension() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const IndexMonomial& m, const GaussianRational& c);
    const std::map<IndexMonomial, GaussianRational>& terms() const { return coeffs_; }

    // Degree-k part; the whole form's degree when homogeneous (nullopt if mixed).
    FormValue homogeneous_part(int k) const;
    std::optional<int> degree() const;

    friend FormValue operator+(const FormValue& a, const FormValue& b);
    friend FormValue operator-(const FormValue& a, const FormValue& b);
    friend FormValue operator*(const GaussianRational& s, const FormValue& a);
    friend bool operator==(const FormValue& a, const FormValue& b);

    std::string str() const;

  private:
    int n_ = 0;
    std::map<IndexMonomial, GaussianRational> coeffs_;
};

// Graded-commutative associative product. Rejects dimension mismatch.
FormValue wedge(const FormValue& a, const FormValue& b);
FormValue wedge_power(const FormValue& a, int power);

// Canonical basis tables of all exterior powers of an n-dimensional space.
class ExteriorSpace {
  public:
    explicit ExteriorSpace(int n);

    int n() const { return n_; }
    int dim(int k) const;  // C(n,k); 0 outside 0..n

    const std::vector<IndexMonomial>& basis(int k) const { return monos_[k]; }
    int index_of(const IndexMonomial& m) const;

    ExactMatrix to_vector(const FormValue& f, int k) const;
    FormValue to_form(const ExactMatrix& column, int k) const;

    // Matrix of (f ∧ ·) : Λ^k -> Λ^{k+deg f} for homogeneous f.
    ExactMatrix wedge_matrix(const FormValue& f, int k) const;

    // sign with e_I ∧ e_{I^c} = sign * e_{1..n}
    int complement_sign(const IndexMonomial& m) const;
    IndexMonomial complement(const IndexMonomial& m) const;

    // k-th compound of a 1-form gram matrix: G_k[I][J] = det(g[I_a][J_b]).
    ExactMatrix compound_gram(const ExactMatrix& gram1, int k) const;

    // Hermitian product <a,b> = conj(b)^T G_k a of two degree-k coefficient
    // vectors.
    static GaussianRational inner(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& gram_k);

  private:
    int n_;
    std::vector<std::vector<IndexMonomial>> monos_;
    std::vector<std::map<IndexMonomial, int>> index_;
};

// <a,b> on (possibly mixed-degree) forms from the 1-form gram matrix;
// sesquilinear, conjugate-linear in the second argument; mixed degrees pair
// to zero.
GaussianRational inner_product(const FormValue& a, const FormValue& b, const ExactMatrix& gram1);

// Serialization of monomial keys ("e1^e3") and forms.
std::optional<IndexMonomial> parse_monomial_key(const std::string& key, int dimension);

}  // namespace ak::exterior
