#pragma once

// Exact scalars: arbitrary precision rationals (GMP) and Gaussian rationals.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace waringlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown on malformed input data (bad rational strings, dimension mismatches).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical "p/q" string, q > 0, gcd(p,q) = 1. Integers print as "p/1".
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p" (optional sign). Throws Error otherwise.
Rational parse_rational(std::string_view text);

int sign(const Rational& q);
Rational abs(const Rational& q);

enum class FieldTag { Rational, GaussianRational };

/// re + im*i with exact rational parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    FieldTag field() const { return is_real() ? FieldTag::Rational : FieldTag::GaussianRational; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    /// Lexicographic on (re, im); only used to make orders deterministic.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

Scalar pow(Scalar base, unsigned e);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

Integer binomial(unsigned n, unsigned k);

}  // namespace waringlab
