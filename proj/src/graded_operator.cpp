#include "ak/graded_operator.hpp"

#include <stdexcept>

namespace ak::opcalc {

GradedOperator::GradedOperator(std::string label, BidegreeShift shift, const ExteriorSpace& space)
    : label_(std::move(label)), shift_(shift), n_(space.n()) {
    for (int k = 0; k <= n_; ++k)
        blocks_.emplace(k, ExactMatrix(space.dim(k + shift_.total()), space.dim(k)));
}

GradedOperator GradedOperator::zero(std::string label, BidegreeShift shift, const ExteriorSpace& space) {
    return GradedOperator(std::move(label), shift, space);
}

GradedOperator GradedOperator::identity(const ExteriorSpace& space) {
    GradedOperator id("id", BidegreeShift{0, 0}, space);
    for (int k = 0; k <= space.n(); ++k) id.block(k) = ExactMatrix::identity(space.dim(k));
    return id;
}

const ExactMatrix& GradedOperator::block(int k) const {
    auto it = blocks_.find(k);
    if (it == blocks_.end()) throw std::out_of_range("GradedOperator::block degree out of range");
    return it->second;
}

ExactMatrix& GradedOperator::block(int k) {
    auto it = blocks_.find(k);
    if (it == blocks_.end()) throw std::out_of_range("GradedOperator::block degree out of range");
    return it->second;
}

bool GradedOperator::is_zero() const {
    for (const auto& [k, m] : blocks_)
        if (!m.is_zero()) return false;
    return true;
}

ExactMatrix GradedOperator::apply(const ExactMatrix& v, int k) const { return block(k) * v; }

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    if (a.degree() != b.degree() || a.n_ != b.n_)
        throw std::invalid_argument("GradedOperator sum: degree mismatch");
    GradedOperator out = a;
    out.label_ = a.label_ + "+" + b.label_;
    // bidegree shift of a sum is only meaningful through its total degree
    for (auto& [k, m] : out.blocks_) m = m + b.block(k);
    return out;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    if (a.degree() != b.degree() || a.n_ != b.n_)
        throw std::invalid_argument("GradedOperator difference: degree mismatch");
    GradedOperator out = a;
    out.label_ = a.label_ + "-" + b.label_;
    for (auto& [k, m] : out.blocks_) m = m - b.block(k);
    return out;
}

GradedOperator operator*(const GaussianRational& s, const GradedOperator& a) {
    GradedOperator out = a;
    for (auto& [k, m] : out.blocks_) m = s * m;
    return out;
}

bool GradedOperator::equal_blocks(const GradedOperator& other) const {
    if (n_ != other.n_ || degree() != other.degree()) return false;
    for (const auto& [k, m] : blocks_)
        if (!(m == other.block(k))) return false;
    return true;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b, const ExteriorSpace& space) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("compose: dimension mismatch");
    BidegreeShift s{a.shift().p + b.shift().p, a.shift().q + b.shift().q};
    GradedOperator out(a.label() + "∘" + b.label(), s, space);
    for (int k = 0; k <= space.n(); ++k) {
        int mid = k + b.degree();
        if (mid < 0 || mid > space.n()) continue;  // b lands outside: block stays zero
        out.block(k) = a.block(mid) * b.block(k);
    }
    return out;
}

GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b,
                                 const ExteriorSpace& space) {
    GradedOperator ab = compose(a, b, space), ba = compose(b, a, space);
    int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    GradedOperator out = sign == 1 ? ab - ba : ab + ba;
    out.set_label("[" + a.label() + "," + b.label() + "]");
    return out;
}

GradedOperator derivation_from_one_forms(const std::vector<exterior::FormValue>& images,
                                         const ExteriorSpace& space, const std::string& label) {
    using exact::Rational;
    using exterior::FormValue;
    using exterior::IndexMonomial;
    int n = space.n();
    GradedOperator out(label, BidegreeShift{1, 0}, space);
    for (int k = 0; k <= n; ++k) {
        for (int col = 0; col < space.dim(k); ++col) {
            const IndexMonomial& mono = space.basis(k)[col];
            FormValue acc(n);
            for (std::size_t t = 0; t < mono.indices.size(); ++t) {
                // D(e_{i1}^..^e_{ik}) = sum_t (-1)^t e_{i1}^..^(D e_{it})^..^e_{ik}
                FormValue prefix(n);
                std::vector<int> pre(mono.indices.begin(), mono.indices.begin() + t);
                prefix.add_term(IndexMonomial{pre}, GaussianRational(Rational(t % 2 == 0 ? 1 : -1)));
                FormValue suffix(n);
                std::vector<int> post(mono.indices.begin() + t + 1, mono.indices.end());
                suffix.add_term(IndexMonomial{post}, GaussianRational(1));
                acc = acc + exterior::wedge(exterior::wedge(prefix, images[mono.indices[t]]), suffix);
            }
            for (const auto& [mm, c] : acc.terms()) out.block(k).at(space.index_of(mm), col) = c;
        }
    }
    return out;
}

GradedOperator gram_adjoint(const GradedOperator& op, const std::vector<ExactMatrix>& gram,
                            const ExteriorSpace& space) {
    BidegreeShift s{-op.shift().p, -op.shift().q};
    GradedOperator out(op.label() + "*", s, space);
    int d = op.degree();
    for (int l = 0; l <= space.n(); ++l) {
        int k = l - d;  // source degree of op whose target is l
        if (k < 0 || k > space.n()) continue;
        out.block(l) = inverse(gram[k]) * (op.block(k).conj_transpose() * gram[l]);
    }
    return out;
}

}  // namespace ak::opcalc
