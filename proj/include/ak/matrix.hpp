#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ak/rational.hpp"

namespace ak::exact {

// Dense matrix over the Gaussian rationals. Equality is entrywise exact.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix column(const std::vector<GaussianRational>& entries);
    static ExactMatrix diagonal(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_hermitian() const;

    ExactMatrix transpose() const;
    ExactMatrix conj_transpose() const;
    ExactMatrix conj() const;
    // Entrywise real/imaginary parts.
    ExactMatrix real_part() const;
    bool is_real() const;

    ExactMatrix col_slice(const std::vector<std::size_t>& cols) const;
    std::vector<GaussianRational> col_vector(std::size_t c) const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    static ExactMatrix hstack(const std::vector<ExactMatrix>& parts);
    static ExactMatrix vstack(const std::vector<ExactMatrix>& parts);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

struct RrefResult {
    ExactMatrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

// Reduced row echelon form (unique for a given matrix, hence canonical).
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Canonical RREF free-variable kernel basis. Columns of the returned matrices
// satisfy m*v = 0 and span the kernel.
std::vector<ExactMatrix> nullspace(const ExactMatrix& m);

// Columns of the returned matrix form the canonical kernel basis (may have
// zero columns for a trivial kernel).
ExactMatrix nullspace_matrix(const ExactMatrix& m);

ExactMatrix inverse(const ExactMatrix& m);  // throws std::domain_error if singular

GaussianRational determinant(const ExactMatrix& m);

// Solves a*x = b exactly; nullopt when inconsistent. When the system is
// underdetermined the canonical particular solution (free variables = 0)
// is returned.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// span(a) == span(b) for column spans.
bool same_column_span(const ExactMatrix& a, const ExactMatrix& b);

// Does span(space) contain every column of vectors?
bool span_contains(const ExactMatrix& space, const ExactMatrix& vectors);

}  // namespace ak::exact
