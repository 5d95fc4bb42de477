#include "ak/matrix.hpp"

#include <stdexcept>

namespace ak::exact {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<GaussianRational>& entries) {
    ExactMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& entries) {
    ExactMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = GaussianRational(entries[i]);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_hermitian() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (at(r, c) != at(c, r).conj()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conj();
    return m;
}

ExactMatrix ExactMatrix::real_part() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = GaussianRational(data_[i].re);
    return m;
}

bool ExactMatrix::is_real() const {
    for (const auto& x : data_)
        if (x.im != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::col_slice(const std::vector<std::size_t>& cols) const {
    ExactMatrix m(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < rows_; ++r) m.at(r, j) = at(r, cols[j]);
    return m;
}

std::vector<GaussianRational> ExactMatrix::col_vector(std::size_t c) const {
    std::vector<GaussianRational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a) {
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = -a.data_[i];
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const GaussianRational& bkc = b.at(k, c);
                if (bkc.is_zero()) continue;
                m.at(r, c) += ark * bkc;
            }
        }
    return m;
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a) {
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = s * a.data_[i];
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix ExactMatrix::hstack(const std::vector<ExactMatrix>& parts) {
    if (parts.empty()) return {};
    std::size_t rows = parts.front().rows(), cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        cols += p.cols();
    }
    ExactMatrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < p.cols(); ++c) m.at(r, off + c) = p.at(r, c);
        off += p.cols();
    }
    return m;
}

ExactMatrix ExactMatrix::vstack(const std::vector<ExactMatrix>& parts) {
    if (parts.empty()) return {};
    std::size_t cols = parts.front().cols(), rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw std::invalid_argument("vstack col mismatch");
        rows += p.rows();
    }
    ExactMatrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(off + r, c) = p.at(r, c);
        off += p.rows();
    }
    return m;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult res;
    res.rref = m;
    ExactMatrix& a = res.rref;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        // first row at or below pivot_row with a nonzero entry in this column
        std::size_t sel = a.rows();
        for (std::size_t r = pivot_row; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) { sel = r; break; }
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        GaussianRational inv = GaussianRational(1) / a.at(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) = inv * a.at(pivot_row, c);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(pivot_row, c);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<ExactMatrix> nullspace(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<ExactMatrix> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        ExactMatrix v(m.cols(), 1);
        v.at(free_col, 0) = GaussianRational(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v.at(r.pivot_cols[p], 0) = -r.rref.at(p, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactMatrix nullspace_matrix(const ExactMatrix& m) {
    auto basis = nullspace(m);
    if (basis.empty()) return ExactMatrix(m.cols(), 0);
    return ExactMatrix::hstack(basis);
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw std::domain_error("inverse of non-square matrix");
    ExactMatrix aug = ExactMatrix::hstack({m, ExactMatrix::identity(m.rows())});
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i) throw std::domain_error("singular matrix");
    ExactMatrix inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = r.rref.at(i, m.cols() + j);
    return inv;
}

GaussianRational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw std::domain_error("determinant of non-square matrix");
    ExactMatrix a = m;
    GaussianRational det(1);
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { sel = r; break; }
        if (sel == n) return GaussianRational(0);
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(sel, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        GaussianRational inv = GaussianRational(1) / a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            GaussianRational f = inv * a.at(r, col);
            for (std::size_t c = col; c < n; ++c) a.at(r, c) = a.at(r, c) - f * a.at(col, c);
        }
    }
    return det;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    ExactMatrix aug = ExactMatrix::hstack({a, b});
    RrefResult r = rref(aug);
    // inconsistency: a pivot in the b-block
    for (auto c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    ExactMatrix x(a.cols(), b.cols());
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivot_cols[p], j) = r.rref.at(p, a.cols() + j);
    return x;
}

bool same_column_span(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) return false;
    std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(ExactMatrix::hstack({a, b})) == ra;
}

bool span_contains(const ExactMatrix& space, const ExactMatrix& vectors) {
    if (vectors.cols() == 0) return true;
    std::size_t r = rank(space);
    return rank(ExactMatrix::hstack({space, vectors})) == r;
}

}  // namespace ak::exact
