#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>
#include <utility>

namespace hkdf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Parses "p/q", integer, or decimal ("-1.25") strings exactly.
Rational rational_from_string(std::string_view s);

// Every finite double is dyadic, so this conversion is exact.
Rational rational_from_double(double v);

double to_double(const Rational& r);

// "p/q" with q > 0, or just "p" when q == 1.
std::string to_fraction_string(const Rational& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Exact complex number with rational real and imaginary parts.
// cpp_rational keeps numerator/denominator coprime with positive
// denominator, so values are always canonical.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long v) : re(v) {}
    GaussianRational(int v) : re(v) {}
    GaussianRational(const BigInt& v) : re(v) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Complex to_complex() const { return {to_double(re), to_double(im)}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    bool operator==(const GaussianRational&) const = default;
};

// "a+bi" form; also accepts pure "bi" and plain rationals.
GaussianRational gaussian_from_string(std::string_view s);
std::string to_string(const GaussianRational& g);

}  // namespace hkdf
