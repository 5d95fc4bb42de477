#include "ak/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace ak::exterior {

std::string IndexMonomial::key() const {
    if (indices.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += "^";
        out += "e" + std::to_string(indices[i]);
    }
    return out;
}

std::optional<std::pair<int, IndexMonomial>> canonical_monomial(std::vector<int> indices) {
    int sign = 1;
    // adjacent-transposition bubble sort, counting swaps
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
            if (indices[j] == indices[j + 1]) return std::nullopt;
            if (indices[j] > indices[j + 1]) {
                std::swap(indices[j], indices[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i] == indices[i + 1]) return std::nullopt;
    return std::make_pair(sign, IndexMonomial{std::move(indices)});
}

void FormValue::add_term(const IndexMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
        coeffs_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

FormValue FormValue::homogeneous_part(int k) const {
    FormValue out(n_);
    for (const auto& [m, c] : coeffs_)
        if (m.degree() == k) out.add_term(m, c);
    return out;
}

std::optional<int> FormValue::degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : coeffs_) {
        if (!deg) deg = m.degree();
        else if (*deg != m.degree()) return std::nullopt;
    }
    return deg;
}

FormValue operator+(const FormValue& a, const FormValue& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("form dimension mismatch");
    FormValue out = a;
    for (const auto& [m, c] : b.coeffs_) out.add_term(m, c);
    return out;
}

FormValue operator-(const FormValue& a, const FormValue& b) {
    return a + (GaussianRational(-1) * b);
}

FormValue operator*(const GaussianRational& s, const FormValue& a) {
    FormValue out(a.n_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.coeffs_) out.add_term(m, s * c);
    return out;
}

bool operator==(const FormValue& a, const FormValue& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

std::string FormValue::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += "(" + exact::to_string(c) + ")*" + m.key();
    }
    return out;
}

FormValue wedge(const FormValue& a, const FormValue& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("wedge dimension mismatch");
    FormValue out(a.dimension());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> merged = ma.indices;
            merged.insert(merged.end(), mb.indices.begin(), mb.indices.end());
            auto canon = canonical_monomial(std::move(merged));
            if (!canon) continue;
            out.add_term(canon->second, GaussianRational(Rational(canon->first)) * ca * cb);
        }
    return out;
}

FormValue wedge_power(const FormValue& a, int power) {
    FormValue out(a.dimension());
    out.add_term(IndexMonomial{}, GaussianRational(1));
    for (int i = 0; i < power; ++i) out = wedge(out, a);
    return out;
}

ExteriorSpace::ExteriorSpace(int n) : n_(n), monos_(n + 1), index_(n + 1) {
    for (int k = 0; k <= n; ++k) {
        // enumerate k-subsets of 1..n in lexicographic order
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i + 1;
        while (true) {
            monos_[k].push_back(IndexMonomial{pick});
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i + 1) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        for (std::size_t i = 0; i < monos_[k].size(); ++i) index_[k][monos_[k][i]] = static_cast<int>(i);
    }
}

int ExteriorSpace::dim(int k) const {
    if (k < 0 || k > n_) return 0;
    return static_cast<int>(monos_[k].size());
}

int ExteriorSpace::index_of(const IndexMonomial& m) const {
    int k = m.degree();
    auto it = index_[k].find(m);
    if (it == index_[k].end()) throw std::invalid_argument("monomial out of range: " + m.key());
    return it->second;
}

ExactMatrix ExteriorSpace::to_vector(const FormValue& f, int k) const {
    ExactMatrix v(dim(k), 1);
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != k) throw std::invalid_argument("to_vector: degree mismatch");
        v.at(index_of(m), 0) = c;
    }
    return v;
}

FormValue ExteriorSpace::to_form(const ExactMatrix& column, int k) const {
    FormValue f(n_);
    for (std::size_t i = 0; i < column.rows(); ++i) f.add_term(monos_[k][i], column.at(i, 0));
    return f;
}

ExactMatrix ExteriorSpace::wedge_matrix(const FormValue& f, int k) const {
    auto fdeg = f.degree();
    int d = fdeg.value_or(0);
    if (f.is_zero()) d = 0;
    ExactMatrix m(dim(k + d), dim(k));
    for (int j = 0; j < dim(k); ++j) {
        FormValue basis(n_);
        basis.add_term(monos_[k][j], GaussianRational(1));
        FormValue w = wedge(f, basis);
        for (const auto& [mm, c] : w.terms()) m.at(index_of(mm), j) = c;
    }
    return m;
}

int ExteriorSpace::complement_sign(const IndexMonomial& m) const {
    std::vector<int> merged = m.indices;
    IndexMonomial comp = complement(m);
    merged.insert(merged.end(), comp.indices.begin(), comp.indices.end());
    auto canon = canonical_monomial(std::move(merged));
    return canon->first;
}

IndexMonomial ExteriorSpace::complement(const IndexMonomial& m) const {
    std::vector<int> comp;
    std::size_t pos = 0;
    for (int i = 1; i <= n_; ++i) {
        if (pos < m.indices.size() && m.indices[pos] == i) { ++pos; continue; }
        comp.push_back(i);
    }
    return IndexMonomial{std::move(comp)};
}

ExactMatrix ExteriorSpace::compound_gram(const ExactMatrix& gram1, int k) const {
    int m = dim(k);
    ExactMatrix g(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const auto& ia = monos_[k][a].indices;
            const auto& ib = monos_[k][b].indices;
            ExactMatrix sub(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) sub.at(r, c) = gram1.at(ia[r] - 1, ib[c] - 1);
            g.at(a, b) = k == 0 ? GaussianRational(1) : determinant(sub);
        }
    return g;
}

GaussianRational ExteriorSpace::inner(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& gram_k) {
    ExactMatrix r = b.conj_transpose() * (gram_k * a);
    return r.at(0, 0);
}

GaussianRational inner_product(const FormValue& a, const FormValue& b, const ExactMatrix& gram1) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("inner_product dimension mismatch");
    ExteriorSpace space(a.dimension());
    GaussianRational total(0);
    for (int k = 0; k <= a.dimension(); ++k) {
        FormValue ak = a.homogeneous_part(k), bk = b.homogeneous_part(k);
        if (ak.is_zero() || bk.is_zero()) continue;
        ExactMatrix g = space.compound_gram(gram1, k);
        total += ExteriorSpace::inner(space.to_vector(ak, k), space.to_vector(bk, k), g);
    }
    return total;
}

std::optional<IndexMonomial> parse_monomial_key(const std::string& key, int dimension) {
    if (key == "1") return IndexMonomial{};
    std::vector<int> idx;
    std::size_t pos = 0;
    while (pos < key.size()) {
        if (key[pos] != 'e') return std::nullopt;
        ++pos;
        std::size_t start = pos;
        while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
        if (start == pos) return std::nullopt;
        int v = std::stoi(key.substr(start, pos - start));
        if (v < 1 || v > dimension) return std::nullopt;
        idx.push_back(v);
        if (pos < key.size()) {
            if (key[pos] != '^') return std::nullopt;
            ++pos;
            if (pos == key.size()) return std::nullopt;
        }
    }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] >= idx[i + 1]) return std::nullopt;
    return IndexMonomial{std::move(idx)};
}

}  // namespace ak::exterior
