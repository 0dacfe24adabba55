#pragma once

// Linear algebra of Veronese images: evaluation matrices, h^1 of point ideals,
// span membership and intersections, and rational normal curve charts.

#include <optional>
#include <span>
#include <vector>

#include "waringlab/forms.hpp"
#include "waringlab/matrix.hpp"
#include "waringlab/points.hpp"

namespace waringlab {

struct VeroneseSpace {
    unsigned m = 0;
    unsigned d = 0;
    /// Projective dimension of the target, C(m+d, d) - 1.
    std::size_t N() const;
};

/// (v^alpha) over monomials(len, d) for the given representative v.
Vector veronese_vector(std::span<const Scalar> v, unsigned d);
/// (p^alpha) over monomials(m+1, d), evaluated at the canonical representative.
Vector veronese_point(const ProjectivePoint& p, unsigned d);
Matrix veronese_eval_matrix(const PointSet& s, unsigned d);
std::vector<Vector> veronese_points(const PointSet& s, unsigned d);

struct SpanReport {
    std::size_t set_size = 0;
    long span_dim = -1;
    long h1 = 0;
    bool independent = true;
};
SpanReport h1_ideal(const PointSet& s, unsigned d);

/// Coefficients lambda with P = sum lambda_i nu_d(s_i), or nullopt.
std::optional<Vector> membership_coefficients(const HomogeneousForm& p, const PointSet& s);
/// For FieldTag::Rational both P and S must be real (Error otherwise); a real linear
/// system solvable over C is solvable over R, so the same solve decides both.
bool membership(const HomogeneousForm& p, const PointSet& s, FieldTag field);

/// Intersection of the linear spans of two families of vectors.
struct Intersection {
    /// Projective dimension of the intersection (-1 when empty).
    long dim = -1;
    /// The point, canonically scaled, when dim == 0.
    std::optional<Vector> point;
    bool unique() const { return dim == 0; }
};
Intersection span_intersection(std::span<const Vector> a, std::span<const Vector> b);

/// <{P} u nu_d(E)> meet <nu_d(T)>; a point only when that meet is a single point.
/// Throws Error when P is outside <nu_d(E u T)> or E, T overlap.
Intersection unique_intersection_point(const Vector& p, const PointSet& e, const PointSet& t, unsigned d);

struct LemmaC2Result {
    bool hypothesis_holds = false;
    /// Meaningful only when the hypothesis holds.
    bool equal = false;
    SpanReport residual;
};
/// h^1 of the off-curve part of A u B in degree d - deg(curve); when zero, compares
/// the off-curve parts of A and B.
LemmaC2Result lemma_c2_check(const PointSet& a, const PointSet& b, const CurveSpec& curve, unsigned d);

/// Rational parametrization [s:t] -> P^m of a line (degree 1) or smooth conic (degree 2).
class CurveChart {
public:
    /// Parametrized by s*b0 + t*b1 over the canonical basis of the line.
    static CurveChart line(const Subspace& l);
    /// Projection from `base`, which must lie on the smooth conic.
    static CurveChart conic(const CurveSpec& c, const ProjectivePoint& base);

    unsigned degree() const { return degree_; }
    unsigned ambient_dim() const { return static_cast<unsigned>(phi_.size()) - 1; }
    /// phi[i][k] is the coefficient of s^(degree-k) t^k in coordinate i.
    const std::vector<Vector>& phi() const { return phi_; }
    bool is_real() const;

    ProjectivePoint at(const Scalar& s, const Scalar& t) const;
    /// [s:t], canonically scaled; nullopt when q is off the curve.
    std::optional<ProjectivePoint> preimage(const ProjectivePoint& q) const;

    /// W_0..W_n with nu_d(phi(s,t)) = sum_k s^(n-k) t^k W_k, n = degree*d.
    std::vector<Vector> veronese_basis(unsigned d) const;

private:
    unsigned degree_ = 1;
    std::vector<Vector> phi_;
    // conic data (plane coordinates)
    std::optional<Subspace> plane_;
    Matrix frame_inverse_;  // inverse of the frame (base, u, v)
    Vector l_form_;              // L(s,t) = l[0] s + l[1] t
    std::optional<Subspace> line_;
};

/// W_0..W_(deg*d) for the parametrization with phi[i][k] the coefficient of
/// s^(deg-k) t^k in coordinate i.
std::vector<Vector> parametrized_veronese_basis(std::span<const Vector> phi, unsigned deg, unsigned d);

/// c with P = sum_k c_k W_k (the binomial-scaled coefficients of the binary form on
/// the curve), or nullopt when P is outside the span of the curve.
std::optional<Vector> curve_coordinates(const Vector& p, const CurveChart& chart, unsigned d);
/// sum_k c_k W_k.
Vector from_curve_coordinates(std::span<const Scalar> c, const CurveChart& chart, unsigned d);

/// Rank of the middle catalecticant (degree floor(d/2) x ceil(d/2) flattening);
/// a lower bound for the complex rank.
std::size_t catalecticant_rank(const HomogeneousForm& f);

}  // namespace waringlab
