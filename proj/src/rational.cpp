#include "ak/rational.hpp"

#include <cctype>

namespace ak::exact {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + text + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) throw std::domain_error("exact_sqrt of negative rational");
    Integer n = numerator(r), d = denominator(r);
    Integer sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im_part = to_string(z.im) + "i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return to_string(z.re) + "+" + im_part;
    return to_string(z.re) + im_part;  // im < 0 carries its own sign
}

}  // namespace ak::exact
