#include "ak/pencil.hpp"

#include <stdexcept>

namespace ak::exact {

namespace {

// Congruence diagonalization of a Hermitian PSD form: returns P with
// P^H H P diagonal (entries in diag). Fails with a negative-Rayleigh witness
// when H is not PSD.
struct Diagonalization {
    bool psd = false;
    ExactMatrix p;
    std::vector<Rational> diag;
    ExactMatrix witness;
};

Diagonalization diagonalize_psd(const ExactMatrix& h) {
    std::size_t n = h.rows();
    Diagonalization out;
    ExactMatrix a = h;
    ExactMatrix p = ExactMatrix::identity(n);
    out.diag.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational d = a.at(i, i);
        if (d.im != 0) throw std::domain_error("diagonalize_psd: matrix not Hermitian");
        if (d.re < 0) {
            out.witness = p.col_slice({i});
            return out;
        }
        if (d.re == 0) {
            // PSD forces the whole row to vanish; otherwise build a witness
            // v = e_i - t*conj(h)*e_j with t large enough.
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a.at(i, j).is_zero()) continue;
                GaussianRational hij = a.at(i, j);
                Rational x = a.at(j, j).re;
                // v = alpha e_i + e_j, alpha = -t*hij: v^H A v = x - 2 t |hij|^2
                Rational t = x / hij.norm_sq() + 1;
                ExactMatrix v(n, 1);
                v.at(i, 0) = -GaussianRational(t) * hij;
                v.at(j, 0) = GaussianRational(1);
                out.witness = p * v;
                return out;
            }
            continue;  // zero row: diag stays 0
        }
        out.diag[i] = d.re;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            // column op: col_j -= (a_ij / d) col_i, mirrored on rows
            GaussianRational f = a.at(i, j) / d;
            for (std::size_t r = 0; r < n; ++r) {
                p.at(r, j) = p.at(r, j) - f * p.at(r, i);
                a.at(r, j) = a.at(r, j) - f * a.at(r, i);
            }
            GaussianRational fc = f.conj();
            for (std::size_t c = 0; c < n; ++c) a.at(j, c) = a.at(j, c) - fc * a.at(i, c);
        }
    }
    out.psd = true;
    out.p = p;
    return out;
}

}  // namespace

PsdCertificate certify_psd(const ExactMatrix& hermitian) {
    if (!hermitian.is_hermitian()) throw std::domain_error("certify_psd: matrix not Hermitian");
    auto d = diagonalize_psd(hermitian);
    PsdCertificate cert;
    cert.psd = d.psd;
    if (!d.psd) cert.witness = d.witness;
    return cert;
}

PencilResult pencil_min_finite_eigenvalue(const ExactMatrix& a, const ExactMatrix& b,
                                          const ExactMatrix& gram, const ExactMatrix& subspace,
                                          const Rational& width) {
    if (subspace.cols() == 0) throw std::invalid_argument("pencil: empty subspace");
    if (rank(subspace) != subspace.cols()) throw std::invalid_argument("pencil: dependent subspace vectors");
    ExactMatrix sh = subspace.conj_transpose() * gram;
    ExactMatrix a_s = sh * (a * subspace);
    ExactMatrix b_s = sh * (b * subspace);
    if (!a_s.is_hermitian() || !b_s.is_hermitian())
        throw std::domain_error("pencil: restricted forms not Hermitian (operators not self-adjoint)");

    {
        auto ca = certify_psd(a_s);
        if (!ca.psd) throw std::domain_error("pencil: A not PSD on subspace (negative Rayleigh witness found)");
    }
    auto db = diagonalize_psd(b_s);
    if (!db.psd) throw std::domain_error("pencil: B not PSD on subspace (negative Rayleigh witness found)");

    // Coordinates after congruence P: B' = diag(d), A' = P^H A_S P.
    ExactMatrix ap = db.p.conj_transpose() * (a_s * db.p);
    std::vector<std::size_t> pos, zer;
    for (std::size_t i = 0; i < db.diag.size(); ++i)
        (db.diag[i] > 0 ? pos : zer).push_back(i);
    if (pos.empty()) return PencilResult{.infinite = true, .value = {}};

    std::size_t r = pos.size(), z = zer.size();
    ExactMatrix a11(r, r), a12(r, z), a22(z, z);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a11.at(i, j) = ap.at(pos[i], pos[j]);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < z; ++j) a12.at(i, j) = ap.at(pos[i], zer[j]);
    for (std::size_t i = 0; i < z; ++i)
        for (std::size_t j = 0; j < z; ++j) a22.at(i, j) = ap.at(zer[i], zer[j]);

    ExactMatrix schur = a11;
    if (z > 0) {
        // Kernel directions of A22 lie in the common kernel of both restricted
        // forms (A PSD forces A12 to vanish there); drop them and invert the
        // PD remainder on the canonical pivot-coordinate complement.
        ExactMatrix k = nullspace_matrix(a22);
        if (k.cols() > 0 && !(a12 * k).is_zero())
            throw std::domain_error("pencil: A not PSD (A12 does not vanish on ker A22)");
        auto piv = rref(a22).pivot_cols;
        if (!piv.empty()) {
            ExactMatrix c(z, piv.size());
            for (std::size_t j = 0; j < piv.size(); ++j) c.at(piv[j], j) = GaussianRational(1);
            ExactMatrix a22r = c.conj_transpose() * (a22 * c);
            ExactMatrix a12r = a12 * c;
            schur = a11 - a12r * (inverse(a22r) * a12r.conj_transpose());
        }
    }

    // Finite generalized eigenvalues = eigenvalues of D^{-1} * Schur, D PD diagonal.
    ExactMatrix dinv(r, r);
    for (std::size_t i = 0; i < r; ++i) dinv.at(i, i) = GaussianRational(Rational(1) / db.diag[pos[i]]);
    Polynomial p = to_real_polynomial(char_poly(dinv * schur));
    auto roots = isolate_real_roots(p, width);
    if (roots.empty()) throw std::domain_error("pencil: no real eigenvalue (inconsistent reduction)");
    PencilResult res;
    res.value = roots.front();  // isolate_real_roots returns sorted roots
    if (res.value.sign() < 0)
        throw std::domain_error("pencil: negative minimum eigenvalue (A not PSD on subspace)");
    return res;
}

}  // namespace ak::exact
