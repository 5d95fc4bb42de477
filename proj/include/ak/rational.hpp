#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace ak::exact {

// Exact rational scalar. mpq keeps the canonical form (positive denominator,
// reduced fraction) as an internal invariant.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

Rational rat(long num, long den = 1);

// Parses "p", "-p", "p/q" with arbitrary-precision parts. Throws
// std::invalid_argument on malformed input (including q = 0).
Rational parse_rational(const std::string& text);

// Canonical string: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

// Exact square root when the argument is a perfect square of a rational;
// nullopt otherwise. Requires r >= 0.
std::optional<Rational> exact_sqrt(const Rational& r);

// Gaussian rational a + b*i. The base scalar of every matrix in the engine.
struct GaussianRational {
    Rational re{};
    Rational im{};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long n) : re(n) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2, a nonnegative rational; zero iff z = 0.
    Rational norm_sq() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm_sq();
        if (n == 0) throw std::domain_error("division by zero GaussianRational");
        GaussianRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational gauss_i() { return {Rational(0), Rational(1)}; }

// "a", "a+bi" style rendering used in reports and diagnostics.
std::string to_string(const GaussianRational& z);

}  // namespace ak::exact
