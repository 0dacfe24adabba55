#pragma once

// Homogeneous forms over Q(i), linear forms and their pure powers.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "waringlab/scalar.hpp"

namespace waringlab {

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order, larger monomials first (x0^d is the first column).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree d in num_vars variables, in grlex order.
std::vector<Exponent> monomials(unsigned num_vars, unsigned d);
/// d! / prod(alpha_i!)
Integer multinomial(const Exponent& alpha);
/// prod(point_i ^ alpha_i)
Scalar monomial_value(const Exponent& alpha, std::span<const Scalar> point);

/// Scales so that the first nonzero entry equals 1. Throws if all entries are zero.
std::vector<Scalar> canonical_scaling(std::vector<Scalar> coords);

class LinearForm {
public:
    /// Stored in canonical scaling: first nonzero coefficient is 1.
    explicit LinearForm(std::vector<Scalar> coeffs);

    std::size_t num_vars() const { return coeffs_.size(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_real() const;
    LinearForm conj() const;
    Scalar evaluate(std::span<const Scalar> point) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<Scalar> coeffs_;
};

class HomogeneousForm {
public:
    using Terms = std::map<Exponent, Scalar, GrlexGreater>;

    HomogeneousForm(unsigned num_vars, unsigned degree);
    /// Zero coefficients are dropped; exponents must sum to degree.
    HomogeneousForm(unsigned num_vars, unsigned degree, Terms terms);

    unsigned num_vars() const { return num_vars_; }
    unsigned degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;

    /// Coefficient of x^alpha (zero when absent).
    Scalar coeff(const Exponent& alpha) const;
    Scalar evaluate(std::span<const Scalar> point) const;

    /// Coordinates in the basis dual to point evaluation: c_alpha / multinomial(alpha),
    /// ordered as monomials(num_vars, degree). A pure power (p.x)^d maps to (p^alpha).
    std::vector<Scalar> dual_coordinates() const;
    static HomogeneousForm from_dual_coordinates(unsigned num_vars, unsigned degree,
                                                 std::span<const Scalar> coords);

    HomogeneousForm& operator+=(const HomogeneousForm& o);
    HomogeneousForm& operator-=(const HomogeneousForm& o);
    HomogeneousForm& operator*=(const Scalar& c);
    friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
    friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
    friend HomogeneousForm operator*(const Scalar& c, HomogeneousForm a) { return a *= c; }
    friend HomogeneousForm operator*(HomogeneousForm a, const Scalar& c) { return a *= c; }

    friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

private:
    void check_compatible(const HomogeneousForm& o) const;

    unsigned num_vars_;
    unsigned degree_;
    Terms terms_;
};

HomogeneousForm power_of_linear(const LinearForm& L, unsigned d);
HomogeneousForm combine(std::span<const std::pair<Scalar, LinearForm>> terms, unsigned d);
HomogeneousForm conjugate_form(const HomogeneousForm& f);

}  // namespace waringlab
