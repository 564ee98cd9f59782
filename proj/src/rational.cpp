#include "hkdfkit/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hkdf {

Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s[0] == '+') s.remove_prefix(1);  // cpp_int rejects a leading '+'
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den(std::string(s.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        return Rational(BigInt(std::string(s)));
    }
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    bool neg = !digits.empty() && digits[0] == '-';
    for (char c : frac) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal literal");
    }
    BigInt scale = 1;
    for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
    BigInt intpart = digits.empty() || digits == "-" || digits == "+" ? BigInt(0) : BigInt(digits);
    BigInt fracpart = frac.empty() ? BigInt(0) : BigInt(frac);
    BigInt num = intpart * scale + (neg ? -fracpart : fracpart);
    return Rational(num, scale);
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    BigInt num = BigInt(static_cast<long long>(std::ldexp(mant, 53)));
    exp -= 53;
    Rational r(num);
    if (exp > 0) {
        r *= Rational(BigInt(1) << exp);
    } else if (exp < 0) {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned j = 0; j < k; ++j) {
        b *= (n - j);
        b /= (j + 1);
    }
    return b;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n2 = o.re * o.re + o.im * o.im;
    if (n2 == 0) throw std::domain_error("division by zero GaussianRational");
    Rational r = (re * o.re + im * o.im) / n2;
    Rational i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational gaussian_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    // Split  a+bi / a-bi  on the last +/- that is not the leading sign
    // and not part of an exponent (we do not accept exponents here).
    if (s.back() == 'i') {
        std::string_view body = s.substr(0, s.size() - 1);
        size_t split = std::string_view::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos) {
            std::string_view ims = body;
            if (ims.empty() || ims == "+") return GaussianRational::i();
            if (ims == "-") return {Rational(0), Rational(-1)};
            return {Rational(0), rational_from_string(ims)};
        }
        std::string_view res = body.substr(0, split);
        std::string_view ims = body.substr(split);
        Rational im;
        if (ims == "+") {
            im = 1;
        } else if (ims == "-") {
            im = -1;
        } else {
            im = rational_from_string(ims);
        }
        return {rational_from_string(res), im};
    }
    return {rational_from_string(s)};
}

std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return to_fraction_string(g.re);
    std::string im = to_fraction_string(g.im);
    if (g.re == 0) return im + "i";
    if (g.im > 0) return to_fraction_string(g.re) + "+" + im + "i";
    return to_fraction_string(g.re) + im + "i";
}

}  // namespace hkdf
