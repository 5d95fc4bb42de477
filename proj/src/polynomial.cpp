#include "ak/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ak::exact {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots_monic(const std::vector<Rational>& roots) {
    Polynomial p(std::vector<Rational>{Rational(1)});
    for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
    return p;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::sign_at(const Rational& x) const {
    Rational v = eval(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, abs(numerator(c)));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational scale(den_lcm, num_gcd);
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scale;
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (Rational(-1) * b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
    return Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

std::pair<Polynomial, Polynomial> Polynomial::div_rem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.coeffs_.size() > b.coeffs_.size() - 1 ? a.coeffs_.size() - b.coeffs_.size() + 1 : 0);
    while (rem.size() >= b.coeffs_.size()) {
        Rational f = rem.back() / b.coeffs_.back();
        std::size_t shift = rem.size() - b.coeffs_.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem[shift + i] -= f * b.coeffs_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < b.coeffs_.size()) break;
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        bool unit = (a == 1 && i > 0);
        if (!unit) out += to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = Polynomial::div_rem(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return (Rational(1) / x.leading()) * x;  // monic
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    // Yun's algorithm over a field of characteristic zero.
    std::vector<Polynomial> factors;
    if (p.degree() <= 0) return factors;
    Polynomial a = (Rational(1) / p.leading()) * p;
    Polynomial d = a.derivative();
    Polynomial g = gcd(a, d);
    Polynomial c = Polynomial::div_rem(a, g).first;
    Polynomial w = Polynomial::div_rem(d, g).first;
    while (c.degree() > 0) {
        Polynomial y = w - c.derivative();
        Polynomial f = gcd(c, y);
        factors.push_back(f);
        c = Polynomial::div_rem(c, f).first;
        w = Polynomial::div_rem(y, f).first;
    }
    return factors;
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p.primitive_part());
    Polynomial d = p.derivative().primitive_part();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && chain.back().degree() > 0) {
        auto [q, r] = Polynomial::div_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back((Rational(-1) * r).primitive_part());
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// roots in (a, b]
int chain_count(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_root_bound(const Polynomial& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
    return m + 1;
}

struct Isolator {
    const Polynomial& f;        // squarefree, primitive
    std::vector<Polynomial> chain;
    Integer lc;                 // |leading coefficient| of the primitive polynomial
    Rational width;
    unsigned multiplicity;
    std::vector<RealAlgebraicRoot>& out;

    void emit_exact(const Rational& v) { out.push_back(RealAlgebraicRoot::exact(v, multiplicity)); }

    // (lo, hi) contains exactly one root, f(lo) != 0, f(hi) != 0.
    void finish_single(Rational lo, Rational hi) {
        // Shrink until at most one rational with denominator <= lc fits; then the
        // simplest rational in the interval is the root candidate.
        Rational rec_gap = Rational(1, 2 * lc * lc);
        int slo = f.sign_at(lo);
        while (hi - lo >= rec_gap) {
            Rational mid = (lo + hi) / 2;
            int sm = f.sign_at(mid);
            if (sm == 0) { emit_exact(mid); return; }
            if (sm == slo) lo = mid; else hi = mid;
        }
        Rational cand = simplest_rational_between(lo, hi);
        if (f.eval(cand) == 0) { emit_exact(cand); return; }
        // Certified irrational: keep bisecting down to the requested width,
        // stepping around the (non-root) candidate if a midpoint collides.
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            int sm = f.sign_at(mid);
            if (sm == 0) { emit_exact(mid); return; }  // unreachable after certification
            if (sm == slo) lo = mid; else hi = mid;
        }
        RealAlgebraicRoot r;
        r.kind = RealAlgebraicRoot::Kind::Isolated;
        r.lo = lo;
        r.hi = hi;
        r.multiplicity = multiplicity;
        r.poly = f;
        out.push_back(r);
    }

    // f(lo) != 0; roots counted in (lo, hi].
    void isolate(const Rational& lo, const Rational& hi, int count) {
        if (count == 0) return;
        if (count == 1) {
            if (f.sign_at(hi) == 0) { emit_exact(hi); return; }
            finish_single(lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        int left = chain_count(chain, lo, mid);
        isolate(lo, mid, left);
        if (f.sign_at(mid) == 0) {
            // mid was counted in the left half; right half restarts just above.
            // Separate mid from the next root by shrinking delta.
            Rational delta = (hi - mid) / 2;
            while (chain_count(chain, mid, mid + delta) > 0) delta = delta / 2;
            isolate(mid + delta, hi, chain_count(chain, mid + delta, hi));
        } else {
            isolate(mid, hi, count - left);
        }
    }
};

}  // namespace

RealAlgebraicRoot RealAlgebraicRoot::exact(Rational v, unsigned mult) {
    RealAlgebraicRoot r;
    r.kind = Kind::ExactRational;
    r.value = std::move(v);
    r.multiplicity = mult;
    return r;
}

int RealAlgebraicRoot::sign() const {
    if (kind == Kind::ExactRational) return value > 0 ? 1 : (value < 0 ? -1 : 0);
    if (lo >= 0) return 1;   // 0 cannot lie in an irrational isolating interval
    if (hi <= 0) return -1;
    // interval straddles zero: the root is irrational, so nonzero; split on f(0)
    return poly.sign_at(0) == poly.sign_at(lo) ? 1 : -1;
}

void RealAlgebraicRoot::refine(const Rational& w) {
    if (kind == Kind::ExactRational) return;
    int slo = poly.sign_at(lo);
    while (hi - lo > w) {
        Rational mid = (lo + hi) / 2;
        int sm = poly.sign_at(mid);
        if (sm == slo) lo = mid; else hi = mid;
    }
}

std::string RealAlgebraicRoot::str() const {
    if (kind == Kind::ExactRational) return to_string(value);
    return "(" + to_string(lo) + ", " + to_string(hi) + ")";
}

bool root_less(RealAlgebraicRoot a, RealAlgebraicRoot b) {
    for (int iter = 0; iter < 512; ++iter) {
        if (a.upper() < b.lower()) return true;
        if (b.upper() < a.lower()) return false;
        if (a.kind == RealAlgebraicRoot::Kind::ExactRational &&
            b.kind == RealAlgebraicRoot::Kind::ExactRational)
            return a.value < b.value;
        Rational wa = a.upper() - a.lower(), wb = b.upper() - b.lower();
        if (a.kind != RealAlgebraicRoot::Kind::ExactRational && (wa >= wb || b.kind == RealAlgebraicRoot::Kind::ExactRational))
            a.refine(wa / 4);
        else
            b.refine(wb / 4);
    }
    throw std::runtime_error("root_less failed to separate (equal algebraic numbers from distinct factors?)");
}

std::vector<RealAlgebraicRoot> isolate_real_roots(const Polynomial& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (width <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
    std::vector<RealAlgebraicRoot> out;
    auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Polynomial f = factors[i].primitive_part();
        if (f.degree() <= 0) continue;
        Isolator iso{f, sturm_chain(f), abs(numerator(f.leading())), width,
                     static_cast<unsigned>(i + 1), out};
        Rational bound = cauchy_root_bound(f);
        iso.isolate(-bound, bound, chain_count(iso.chain, -bound, bound));
    }
    std::sort(out.begin(), out.end(), [](const RealAlgebraicRoot& a, const RealAlgebraicRoot& b) {
        return root_less(a, b);
    });
    return out;
}

int sturm_count(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    Polynomial g = gcd(p, p.derivative());
    Polynomial sf = g.degree() > 0 ? Polynomial::div_rem(p, g).first : p;
    auto chain = sturm_chain(sf);
    return chain_count(chain, a, b);
}

std::vector<GaussianRational> char_poly(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    // Faddeev-LeVerrier: monic coefficients of det(xI - m).
    std::size_t n = m.rows();
    std::vector<GaussianRational> coeffs(n + 1);
    coeffs[n] = GaussianRational(1);
    ExactMatrix mk = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        GaussianRational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        GaussianRational c = -(tr / GaussianRational(Rational(static_cast<long>(k))));
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c;
    }
    return coeffs;
}

Polynomial to_real_polynomial(const std::vector<GaussianRational>& coeffs) {
    std::vector<Rational> real(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].im != 0) throw std::domain_error("polynomial has nonzero imaginary coefficient");
        real[i] = coeffs[i].re;
    }
    return Polynomial(std::move(real));
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_rational_between(-hi, -lo);
    // 0 < lo <= hi
    Integer fl = numerator(lo) / denominator(lo);  // floor for positive lo
    Rational flr(fl);
    if (flr == lo) return flr;                                   // lo itself is an integer
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);         // an integer lies inside
    return flr + Rational(1) / simplest_rational_between(Rational(1) / (hi - flr), Rational(1) / (lo - flr));
}

}  // namespace ak::exact
