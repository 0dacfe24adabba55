#pragma once

// Points of P^m over Q(i), real lines and conics, incidence and rich-curve search.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "waringlab/matrix.hpp"

namespace waringlab {

class ProjectivePoint {
public:
    /// Stored with first nonzero coordinate equal to 1.
    explicit ProjectivePoint(std::vector<Scalar> coords);

    unsigned ambient_dim() const { return static_cast<unsigned>(coords_.size()) - 1; }
    const std::vector<Scalar>& coords() const { return coords_; }
    bool is_real() const;
    ProjectivePoint conj() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<Scalar> coords_;
};

/// Finite set of distinct points of one P^m, kept in insertion order.
class PointSet {
public:
    explicit PointSet(unsigned m) : m_(m) {}
    /// Throws on duplicates or points of another ambient dimension.
    PointSet(unsigned m, std::vector<ProjectivePoint> points);

    unsigned ambient_dim() const { return m_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const ProjectivePoint& p) const;
    /// Appends p unless already present; returns whether it was added.
    bool insert(const ProjectivePoint& p);
    bool is_real() const;
    FieldTag field() const { return is_real() ? FieldTag::Rational : FieldTag::GaussianRational; }

    /// Set equality, ignoring order.
    bool same_set(const PointSet& other) const;
    PointSet united(const PointSet& other) const;
    PointSet intersected(const PointSet& other) const;
    PointSet minus(const PointSet& other) const;

private:
    unsigned m_;
    std::vector<ProjectivePoint> points_;
};

/// Projective linear subspace, stored as the reduced row echelon basis of its cone.
class Subspace {
public:
    static Subspace span_of(std::span<const Vector> vectors);
    static Subspace span_of_points(std::span<const ProjectivePoint> points);

    /// Projective dimension (number of basis rows minus one).
    int projective_dim() const { return static_cast<int>(basis_.size()) - 1; }
    const std::vector<Vector>& basis() const { return basis_; }
    std::size_t ambient_size() const { return ambient_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const ProjectivePoint& p) const { return contains(p.coords()); }
    /// Coefficients of v in the basis, or nullopt when v is outside.
    std::optional<Vector> coordinates(std::span<const Scalar> v) const;
    /// Vector with the given basis coefficients.
    Vector combine(std::span<const Scalar> coeffs) const;
    bool is_real() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

private:
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
    std::size_t ambient_ = 0;
};

enum class CurveKind { Line, SmoothConic, ReducibleConic, TwoDisjointLines };
const char* to_string(CurveKind k);

/// A line, a reduced conic (plane plus symmetric 3x3 matrix in the plane's basis),
/// or two disjoint lines.
struct CurveSpec {
    CurveKind kind = CurveKind::Line;
    unsigned m = 0;
    /// Line: one entry. ReducibleConic: its two components. TwoDisjointLines: l and r.
    std::vector<Subspace> lines;
    std::optional<Subspace> plane;
    /// Normalized so the first nonzero upper-triangular entry is 1.
    std::optional<Matrix> quadric;

    static CurveSpec line(const Subspace& l);
    static CurveSpec line_through(const ProjectivePoint& p, const ProjectivePoint& q);
    /// Union of two distinct concurrent lines, as a reducible conic.
    static CurveSpec line_pair(const Subspace& a, const Subspace& b);
    static CurveSpec two_disjoint_lines(const Subspace& l, const Subspace& r);
    /// Conic in the given plane; kind decided by the rank of the matrix. Throws for
    /// rank <= 1 (double lines are outside scope).
    static CurveSpec conic(const Subspace& plane, const Matrix& q);

    /// 1 for lines, 2 for conics and line pairs.
    int degree() const { return kind == CurveKind::Line ? 1 : 2; }
    bool contains(const ProjectivePoint& p) const;
    /// Fixed by coordinate-wise conjugation.
    bool is_real() const;
    /// Node of a reducible conic.
    std::optional<ProjectivePoint> node() const;

    friend bool operator==(const CurveSpec& a, const CurveSpec& b);
};

/// Lines sharing no point (their cones meet only in 0).
bool lines_disjoint(const Subspace& l, const Subspace& r);
/// Value of the conic's quadratic form at plane coordinates u.
Scalar conic_value(const Matrix& q, std::span<const Scalar> u);

struct Split {
    PointSet on;
    PointSet off;
};
Split split_on_curve(const PointSet& s, const CurveSpec& curve);

struct RichCurve {
    CurveSpec curve;
    std::size_t count = 0;
};
/// Every line through two points of S holding at least `threshold` points of S,
/// sorted by count (descending) then by the canonical basis.
std::vector<RichCurve> find_rich_lines(const PointSet& s, std::size_t threshold);
/// Every conic through five coplanar points of S (with a unique conic through them)
/// holding at least `threshold` points of S, deduplicated and sorted like lines.
std::vector<RichCurve> find_rich_conics(const PointSet& s, std::size_t threshold);
/// The conic through five coplanar points, when it is unique and reduced.
std::optional<CurveSpec> conic_through(std::span<const ProjectivePoint> five);
/// Closure of S under conjugation; conjugates follow their source point.
PointSet conjugation_orbit(const PointSet& s);

}  // namespace waringlab
