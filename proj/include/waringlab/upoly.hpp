#pragma once

// Dense univariate polynomials over Q or Q(i), plus Sturm sequences over Q.

#include <optional>
#include <utility>
#include <vector>

#include "waringlab/scalar.hpp"

namespace waringlab {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Coefficients stored low degree first; the zero polynomial has no coefficients.
template <typename T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(T v) { return UPoly(std::vector<T>{std::move(v)}); }
    /// x - root
    static UPoly linear_root(const T& root) { return UPoly(std::vector<T>{-root, T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& lead() const { return c_.back(); }

    T operator()(const T& x) const
    {
        T v(0);
        for (std::size_t k = c_.size(); k-- > 0;) {
            v *= x;
            v += c_[k];
        }
        return v;
    }

    UPoly derivative() const
    {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
        return UPoly(std::move(d));
    }

    UPoly monic() const
    {
        if (is_zero()) return *this;
        UPoly r = *this;
        T inv = T(1) / lead();
        for (auto& c : r.c_) c *= inv;
        return r;
    }

    UPoly& operator+=(const UPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (waringlab::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const T& s, const UPoly& a)
    {
        std::vector<T> r = a.c_;
        for (auto& c : r) c *= s;
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Euclidean division; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
    {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> rem = a.c_;
        if (a.degree() < b.degree()) return {UPoly(), a};
        std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
        T inv = T(1) / b.lead();
        for (int k = a.degree(); k >= b.degree(); --k) {
            T f = rem[static_cast<std::size_t>(k)] * inv;
            if (waringlab::is_zero(f)) continue;
            std::size_t shift = static_cast<std::size_t>(k - b.degree());
            q[shift] = f;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
        }
        rem.resize(static_cast<std::size_t>(b.degree()));
        return {UPoly(std::move(q)), UPoly(std::move(rem))};
    }

    /// Monic gcd (zero when both are zero).
    static UPoly gcd(UPoly a, UPoly b)
    {
        while (!b.is_zero()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    bool is_squarefree() const
    {
        if (is_zero()) return false;
        return gcd(*this, derivative()).degree() == 0;
    }

private:
    void trim()
    {
        while (!c_.empty() && waringlab::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using QPoly = UPoly<Rational>;
using CPoly = UPoly<Scalar>;

CPoly to_complex(const QPoly& p);
/// Real parts; nullopt when some coefficient is not real.
std::optional<QPoly> to_rational(const CPoly& p);

/// Sturm chain of a rational polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const QPoly& p);
    /// Sign variations of the chain at x.
    int variations(const Rational& x) const;
    int variations_at_infinity(bool positive) const;
    /// Number of distinct real roots.
    int count_real_roots() const;
    /// Number of distinct real roots in (lo, hi].
    int count_in(const Rational& lo, const Rational& hi) const;

private:
    std::vector<QPoly> chain_;
};

/// Exactly one real root lies in (lo, hi]; lo == hi marks an exact rational root.
struct RealRootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

/// Upper bound on |root| for every root (Cauchy).
Rational cauchy_bound(const QPoly& p);
/// Isolates all real roots of a square-free polynomial, sorted increasingly.
std::vector<RealRootInterval> isolate_real_roots(const QPoly& p);
/// Bisects until hi - lo <= width (square-free p, one root inside).
RealRootInterval refine_real_root(const QPoly& p, RealRootInterval iv, const Rational& width);

/// The rational of least denominator (then least numerator) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace waringlab
