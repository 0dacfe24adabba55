#include "waringlab/points.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "waringlab/forms.hpp"

namespace waringlab {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords)
    : coords_(canonical_scaling(std::move(coords)))
{
    if (coords_.size() < 2) throw Error("projective point needs at least two coordinates");
}

bool ProjectivePoint::is_real() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_real(); });
}

ProjectivePoint ProjectivePoint::conj() const
{
    std::vector<Scalar> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(x.conj());
    return ProjectivePoint(std::move(c));
}

PointSet::PointSet(unsigned m, std::vector<ProjectivePoint> points) : m_(m)
{
    for (auto& p : points)
        if (!insert(p)) throw Error("duplicate point " + std::to_string(points_.size()) + " in point set");
}

bool PointSet::contains(const ProjectivePoint& p) const
{
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

bool PointSet::insert(const ProjectivePoint& p)
{
    if (p.ambient_dim() != m_)
        throw Error("point of P^" + std::to_string(p.ambient_dim()) + " in a set of P^" + std::to_string(m_));
    if (contains(p)) return false;
    points_.push_back(p);
    return true;
}

bool PointSet::is_real() const
{
    return std::all_of(points_.begin(), points_.end(), [](const auto& p) { return p.is_real(); });
}

bool PointSet::same_set(const PointSet& other) const
{
    if (m_ != other.m_ || size() != other.size()) return false;
    return std::all_of(points_.begin(), points_.end(), [&](const auto& p) { return other.contains(p); });
}

PointSet PointSet::united(const PointSet& other) const
{
    PointSet r = *this;
    for (const auto& p : other) r.insert(p);
    return r;
}

PointSet PointSet::intersected(const PointSet& other) const
{
    PointSet r(m_);
    for (const auto& p : points_)
        if (other.contains(p)) r.insert(p);
    return r;
}

PointSet PointSet::minus(const PointSet& other) const
{
    PointSet r(m_);
    for (const auto& p : points_)
        if (!other.contains(p)) r.insert(p);
    return r;
}

Subspace Subspace::span_of(std::span<const Vector> vectors)
{
    if (vectors.empty()) throw Error("span of no vectors");
    Subspace s;
    s.ambient_ = vectors.front().size();
    auto e = Matrix::from_rows(vectors, s.ambient_).rref();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
    s.pivots_ = e.pivots;
    if (s.basis_.empty()) throw Error("span of zero vectors");
    return s;
}

Subspace Subspace::span_of_points(std::span<const ProjectivePoint> points)
{
    std::vector<Vector> v;
    for (const auto& p : points) v.push_back(p.coords());
    return span_of(v);
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const
{
    if (v.size() != ambient_) throw Error("vector length does not match subspace");
    Vector c;
    for (auto p : pivots_) c.push_back(v[p]);
    if (!std::equal(v.begin(), v.end(), combine(c).begin())) return std::nullopt;
    return c;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

Vector Subspace::combine(std::span<const Scalar> coeffs) const
{
    Vector r(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_[i][j].is_zero()) r[j] += coeffs[i] * basis_[i][j];
    }
    return r;
}

bool Subspace::is_real() const
{
    for (const auto& row : basis_)
        for (const auto& x : row)
            if (!x.is_real()) return false;
    return true;
}

const char* to_string(CurveKind k)
{
    switch (k) {
    case CurveKind::Line: return "line";
    case CurveKind::SmoothConic: return "smooth_conic";
    case CurveKind::ReducibleConic: return "reducible_conic";
    case CurveKind::TwoDisjointLines: return "two_disjoint_lines";
    }
    return "?";
}

namespace {

Matrix normalized_quadric(const Matrix& q)
{
    std::vector<Scalar> upper;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) upper.push_back(q(i, j));
    upper = canonical_scaling(std::move(upper));
    Matrix r(3, 3);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) r(i, j) = r(j, i) = upper[k++];
    return r;
}

// Linear form on plane coordinates vanishing on the given line of the plane.
Vector line_equation(const Subspace& plane, const Subspace& line)
{
    std::vector<Vector> rows;
    for (const auto& b : line.basis()) {
        auto c = plane.coordinates(b);
        if (!c) throw Error("line does not lie in the plane");
        rows.push_back(*c);
    }
    auto k = Matrix::from_rows(rows, 3).kernel();
    return k.front();
}

Scalar bilinear(const Matrix& q, std::span<const Scalar> u, std::span<const Scalar> v)
{
    Scalar s;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!q(i, j).is_zero()) s += u[i] * q(i, j) * v[j];
    return s;
}

}  // namespace

Scalar conic_value(const Matrix& q, std::span<const Scalar> u) { return bilinear(q, u, u); }

bool lines_disjoint(const Subspace& l, const Subspace& r)
{
    std::vector<Vector> v = l.basis();
    v.insert(v.end(), r.basis().begin(), r.basis().end());
    return span_rank(v) == 4;
}

CurveSpec CurveSpec::line(const Subspace& l)
{
    if (l.projective_dim() != 1) throw Error("subspace is not a line");
    CurveSpec c;
    c.kind = CurveKind::Line;
    c.m = static_cast<unsigned>(l.ambient_size()) - 1;
    c.lines = {l};
    return c;
}

CurveSpec CurveSpec::line_through(const ProjectivePoint& p, const ProjectivePoint& q)
{
    std::vector<ProjectivePoint> pq{p, q};
    return line(Subspace::span_of_points(pq));
}

CurveSpec CurveSpec::two_disjoint_lines(const Subspace& l, const Subspace& r)
{
    if (l.projective_dim() != 1 || r.projective_dim() != 1) throw Error("subspace is not a line");
    if (!lines_disjoint(l, r)) throw Error("lines are not disjoint");
    CurveSpec c;
    c.kind = CurveKind::TwoDisjointLines;
    c.m = static_cast<unsigned>(l.ambient_size()) - 1;
    c.lines = {l, r};
    return c;
}

CurveSpec CurveSpec::conic(const Subspace& plane, const Matrix& q)
{
    if (plane.projective_dim() != 2) throw Error("conic needs a plane");
    CurveSpec c;
    c.m = static_cast<unsigned>(plane.ambient_size()) - 1;
    c.plane = plane;
    c.quadric = normalized_quadric(q);
    auto rk = c.quadric->rank();
    if (rk <= 1) throw Error("double line or zero quadric is not a reduced conic");
    c.kind = rk == 3 ? CurveKind::SmoothConic : CurveKind::ReducibleConic;
    return c;
}

CurveSpec CurveSpec::line_pair(const Subspace& a, const Subspace& b)
{
    if (a.projective_dim() != 1 || b.projective_dim() != 1) throw Error("subspace is not a line");
    std::vector<Vector> v = a.basis();
    v.insert(v.end(), b.basis().begin(), b.basis().end());
    auto plane = Subspace::span_of(v);
    if (plane.projective_dim() != 2) throw Error("lines are not distinct and concurrent");
    auto la = line_equation(plane, a), lb = line_equation(plane, b);
    Matrix q(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) q(i, j) = (la[i] * lb[j] + lb[i] * la[j]) / Scalar(2);
    auto c = conic(plane, q);
    c.lines = {std::min(a, b), std::max(a, b)};
    return c;
}

bool CurveSpec::contains(const ProjectivePoint& p) const
{
    if (p.ambient_dim() != m) return false;
    switch (kind) {
    case CurveKind::Line: return lines[0].contains(p);
    case CurveKind::TwoDisjointLines: return lines[0].contains(p) || lines[1].contains(p);
    case CurveKind::SmoothConic:
    case CurveKind::ReducibleConic: {
        auto u = plane->coordinates(p.coords());
        return u && conic_value(*quadric, *u).is_zero();
    }
    }
    return false;
}

bool CurveSpec::is_real() const
{
    if (plane) return plane->is_real() && quadric->is_real();
    return std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.is_real(); });
}

std::optional<ProjectivePoint> CurveSpec::node() const
{
    if (kind != CurveKind::ReducibleConic) return std::nullopt;
    auto k = quadric->kernel();
    return ProjectivePoint(plane->combine(k.front()));
}

bool operator==(const CurveSpec& a, const CurveSpec& b)
{
    return a.kind == b.kind && a.m == b.m && a.lines == b.lines && a.plane == b.plane && a.quadric == b.quadric;
}

Split split_on_curve(const PointSet& s, const CurveSpec& curve)
{
    if (s.ambient_dim() != curve.m)
        throw Error("point set in P^" + std::to_string(s.ambient_dim()) + " but curve in P^" + std::to_string(curve.m));
    Split r{PointSet(s.ambient_dim()), PointSet(s.ambient_dim())};
    for (const auto& p : s) (curve.contains(p) ? r.on : r.off).insert(p);
    return r;
}

namespace {

std::size_t count_on(const PointSet& s, const CurveSpec& c)
{
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](const auto& p) { return c.contains(p); }));
}

// Symmetric matrix of the conic through five points given in plane coordinates.
std::optional<Matrix> unique_conic(std::span<const Vector> u)
{
    std::vector<Vector> rows;
    for (const auto& w : u)
        rows.push_back({w[0] * w[0], w[0] * w[1], w[0] * w[2], w[1] * w[1], w[1] * w[2], w[2] * w[2]});
    auto ker = Matrix::from_rows(rows, 6).kernel();
    if (ker.size() != 1) return std::nullopt;
    const auto& c = ker[0];
    Matrix q(3, 3);
    Scalar half(Rational(1, 2));
    q(0, 0) = c[0];
    q(0, 1) = q(1, 0) = c[1] * half;
    q(0, 2) = q(2, 0) = c[2] * half;
    q(1, 1) = c[3];
    q(1, 2) = q(2, 1) = c[4] * half;
    q(2, 2) = c[5];
    return q;
}

bool curve_less(const RichCurve& a, const RichCurve& b)
{
    if (a.count != b.count) return a.count > b.count;
    if (a.curve.plane != b.curve.plane) return a.curve.plane < b.curve.plane;
    if (a.curve.quadric && b.curve.quadric) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if ((*a.curve.quadric)(i, j) != (*b.curve.quadric)(i, j))
                    return (*a.curve.quadric)(i, j) < (*b.curve.quadric)(i, j);
    }
    return a.curve.lines < b.curve.lines;
}

}  // namespace

std::vector<RichCurve> find_rich_lines(const PointSet& s, std::size_t threshold)
{
    std::set<Subspace> seen;
    std::vector<RichCurve> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            auto c = CurveSpec::line_through(s[i], s[j]);
            if (!seen.insert(c.lines[0]).second) continue;
            auto n = count_on(s, c);
            if (n >= threshold) out.push_back({std::move(c), n});
        }
    std::sort(out.begin(), out.end(), curve_less);
    return out;
}

std::vector<RichCurve> find_rich_conics(const PointSet& s, std::size_t threshold)
{
    std::vector<RichCurve> out;
    if (threshold < 5) threshold = 5;
    std::set<Subspace> planes;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                std::vector<ProjectivePoint> t{s[i], s[j], s[k]};
                auto pl = Subspace::span_of_points(t);
                if (pl.projective_dim() == 2) planes.insert(std::move(pl));
            }

    for (const auto& plane : planes) {
        std::vector<std::size_t> idx;
        std::vector<Vector> u;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (auto c = plane.coordinates(s[i].coords())) {
                idx.push_back(i);
                u.push_back(std::move(*c));
            }
        const std::size_t n = idx.size();
        if (n < threshold) continue;

        // point flags of every conic through six or more points; a conic through
        // exactly five is reached from one subset only
        std::vector<std::vector<bool>> found;
        auto on_found = [&](std::span<const std::size_t> sub) {
            for (const auto& f : found)
                if (std::all_of(sub.begin(), sub.end(), [&](auto a) { return f[a]; })) return true;
            return false;
        };

        std::vector<std::size_t> sub{0, 1, 2, 3, 4};
        // the smallest index on a conic with `threshold` points is at most n - threshold
        while (sub[0] <= n - threshold) {
            if (!on_found(sub)) {
                std::vector<Vector> five;
                for (auto a : sub) five.push_back(u[a]);
                auto unique = unique_conic(five);
                if (unique) {
                    const Matrix& q = *unique;
                    std::vector<bool> flags(n, false);
                    std::vector<std::size_t> on;
                    for (std::size_t a = 0; a < n; ++a)
                        if (conic_value(q, u[a]).is_zero()) {
                            on.push_back(a);
                            flags[a] = true;
                        }
                    if (on.size() > 5) found.push_back(std::move(flags));
                    if (on.size() >= threshold && q.rank() >= 2) {
                        auto curve = CurveSpec::conic(plane, q);
                        if (curve.kind == CurveKind::ReducibleConic) {
                            std::set<Subspace> comps;
                            for (std::size_t x = 0; x < on.size(); ++x)
                                for (std::size_t y = x + 1; y < on.size(); ++y)
                                    if (bilinear(q, u[on[x]], u[on[y]]).is_zero()) {
                                        std::vector<ProjectivePoint> pq{s[idx[on[x]]], s[idx[on[y]]]};
                                        comps.insert(Subspace::span_of_points(pq));
                                    }
                            if (comps.size() == 2) curve.lines.assign(comps.begin(), comps.end());
                        }
                        out.push_back({std::move(curve), on.size()});
                    }
                }
            }
            // next 5-subset in lexicographic order
            int p = 4;
            while (p >= 0 && sub[p] == n - 5 + static_cast<std::size_t>(p)) --p;
            if (p < 0) break;
            ++sub[p];
            for (int q = p + 1; q < 5; ++q) sub[q] = sub[q - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), curve_less);
    return out;
}

std::optional<CurveSpec> conic_through(std::span<const ProjectivePoint> five)
{
    if (five.size() != 5) throw Error("conic_through needs five points");
    auto plane = Subspace::span_of_points(five);
    if (plane.projective_dim() != 2) return std::nullopt;
    std::vector<Vector> u;
    for (const auto& p : five) u.push_back(*plane.coordinates(p.coords()));
    auto q = unique_conic(u);
    if (!q || q->rank() < 2) return std::nullopt;
    return CurveSpec::conic(plane, *q);
}

PointSet conjugation_orbit(const PointSet& s)
{
    PointSet r(s.ambient_dim());
    for (const auto& p : s) {
        r.insert(p);
        r.insert(p.conj());
    }
    return r;
}

}  // namespace waringlab
