#include "waringlab/spans.hpp"

#include <algorithm>
#include <map>

#include "waringlab/upoly.hpp"

namespace waringlab {

std::size_t VeroneseSpace::N() const { return binomial(m + d, d).get_ui() - 1; }

Vector veronese_vector(std::span<const Scalar> v, unsigned d)
{
    Vector row;
    for (const auto& a : monomials(static_cast<unsigned>(v.size()), d)) row.push_back(monomial_value(a, v));
    return row;
}

Vector veronese_point(const ProjectivePoint& p, unsigned d) { return veronese_vector(p.coords(), d); }

std::vector<Vector> veronese_points(const PointSet& s, unsigned d)
{
    std::vector<Vector> rows;
    rows.reserve(s.size());
    for (const auto& p : s) rows.push_back(veronese_point(p, d));
    return rows;
}

Matrix veronese_eval_matrix(const PointSet& s, unsigned d)
{
    auto rows = veronese_points(s, d);
    return Matrix::from_rows(rows, VeroneseSpace{s.ambient_dim(), d}.N() + 1);
}

SpanReport h1_ideal(const PointSet& s, unsigned d)
{
    SpanReport r;
    r.set_size = s.size();
    auto rank = s.empty() ? 0 : veronese_eval_matrix(s, d).rank();
    r.span_dim = static_cast<long>(rank) - 1;
    r.h1 = static_cast<long>(s.size()) - static_cast<long>(rank);
    r.independent = r.h1 == 0;
    return r;
}

std::optional<Vector> membership_coefficients(const HomogeneousForm& p, const PointSet& s)
{
    if (p.num_vars() != s.ambient_dim() + 1) throw Error("form and point set live in different spaces");
    auto target = p.dual_coordinates();
    if (s.empty()) {
        bool zero = std::all_of(target.begin(), target.end(), [](const Scalar& x) { return x.is_zero(); });
        return zero ? std::optional<Vector>(Vector{}) : std::nullopt;
    }
    auto cols = veronese_points(s, p.degree());
    return Matrix::from_columns(cols, target.size()).solve(target);
}

bool membership(const HomogeneousForm& p, const PointSet& s, FieldTag field)
{
    if (field == FieldTag::Rational) {
        if (!p.is_real()) throw Error("real membership requested for a non-real form");
        if (!s.is_real()) throw Error("real membership requested for non-real points");
    }
    return membership_coefficients(p, s).has_value();
}

Intersection span_intersection(std::span<const Vector> a, std::span<const Vector> b)
{
    Intersection r;
    if (a.empty() || b.empty()) return r;
    const std::size_t len = a.front().size();
    std::vector<Vector> cols(a.begin(), a.end());
    for (const auto& v : b) {
        Vector neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        cols.push_back(std::move(neg));
    }
    auto ker = Matrix::from_columns(cols, len).kernel();
    std::vector<Vector> images;
    for (const auto& k : ker) {
        Vector w(len);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (k[i].is_zero()) continue;
            for (std::size_t j = 0; j < len; ++j) w[j] += k[i] * a[i][j];
        }
        if (std::any_of(w.begin(), w.end(), [](const Scalar& x) { return !x.is_zero(); })) images.push_back(std::move(w));
    }
    if (images.empty()) return r;
    r.dim = static_cast<long>(span_rank(images)) - 1;
    if (r.dim == 0) r.point = canonical_scaling(images.front());
    return r;
}

Intersection unique_intersection_point(const Vector& p, const PointSet& e, const PointSet& t, unsigned d)
{
    if (!e.intersected(t).empty()) throw Error("E and T must be disjoint");
    auto all = veronese_points(e.united(t), d);
    std::vector<Vector> with_p = all;
    with_p.push_back(p);
    if (span_rank(with_p) != span_rank(all)) throw Error("P is not in the span of nu_d(E u T)");
    std::vector<Vector> a{p};
    for (auto& v : veronese_points(e, d)) a.push_back(std::move(v));
    auto b = veronese_points(t, d);
    return span_intersection(a, b);
}

LemmaC2Result lemma_c2_check(const PointSet& a, const PointSet& b, const CurveSpec& curve, unsigned d)
{
    const unsigned t = static_cast<unsigned>(curve.degree());
    if (d <= t) throw Error("lemma check needs d > deg(curve)");
    LemmaC2Result r;
    auto a_off = split_on_curve(a, curve).off;
    auto b_off = split_on_curve(b, curve).off;
    r.residual = h1_ideal(a_off.united(b_off), d - t);
    r.hypothesis_holds = r.residual.h1 == 0;
    if (r.hypothesis_holds) r.equal = a_off.same_set(b_off);
    return r;
}

CurveChart CurveChart::line(const Subspace& l)
{
    if (l.projective_dim() != 1) throw Error("chart of a non-line subspace");
    CurveChart c;
    c.degree_ = 1;
    const auto& bs = l.basis();
    for (std::size_t i = 0; i < l.ambient_size(); ++i) c.phi_.push_back({bs[0][i], bs[1][i]});
    c.line_ = l;
    return c;
}

CurveChart CurveChart::conic(const CurveSpec& curve, const ProjectivePoint& base)
{
    if (curve.kind != CurveKind::SmoothConic) throw Error("chart needs a smooth conic");
    if (!curve.contains(base)) throw Error("chart base point is not on the conic");
    const Matrix& q = *curve.quadric;
    const Subspace& plane = *curve.plane;
    Vector b = *plane.coordinates(base.coords());

    std::size_t ui = 0, vi = 0;
    Matrix frame(3, 3);
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i)
        for (std::size_t j = i + 1; j < 3 && !found; ++j) {
            for (std::size_t r = 0; r < 3; ++r) {
                frame(r, 0) = b[r];
                frame(r, 1) = Scalar(r == i ? 1 : 0);
                frame(r, 2) = Scalar(r == j ? 1 : 0);
            }
            if (!frame.determinant().is_zero()) {
                ui = i;
                vi = j;
                found = true;
            }
        }

    Vector qb = q * b;
    Vector mform{q(ui, ui), Scalar(2) * q(ui, vi), q(vi, vi)};
    Vector lform{qb[ui], qb[vi]};
    if (lform[0].is_zero() && lform[1].is_zero()) throw Error("degenerate conic parametrization");

    // plane-coordinate parametrization M(s,t) b - 2 L(s,t) (s e_ui + t e_vi)
    std::vector<Vector> local(3, Vector(3));
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t k = 0; k < 3; ++k) local[r][k] = mform[k] * b[r];
        if (r == ui) {
            local[r][0] -= Scalar(2) * lform[0];
            local[r][1] -= Scalar(2) * lform[1];
        }
        if (r == vi) {
            local[r][1] -= Scalar(2) * lform[0];
            local[r][2] -= Scalar(2) * lform[1];
        }
    }

    CurveChart c;
    c.degree_ = 2;
    c.phi_.assign(plane.ambient_size(), Vector(3));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < plane.ambient_size(); ++a) {
            const Scalar& e = plane.basis()[r][a];
            if (e.is_zero()) continue;
            for (std::size_t k = 0; k < 3; ++k) c.phi_[a][k] += e * local[r][k];
        }
    c.plane_ = plane;
    c.frame_inverse_ = *frame.inverse();
    c.l_form_ = lform;
    return c;
}

bool CurveChart::is_real() const
{
    for (const auto& row : phi_)
        for (const auto& x : row)
            if (!x.is_real()) return false;
    return true;
}

ProjectivePoint CurveChart::at(const Scalar& s, const Scalar& t) const
{
    Vector v(phi_.size());
    for (std::size_t i = 0; i < phi_.size(); ++i) {
        Scalar acc;
        for (unsigned k = 0; k <= degree_; ++k) acc += phi_[i][k] * pow(s, degree_ - k) * pow(t, k);
        v[i] = acc;
    }
    return ProjectivePoint(std::move(v));
}

std::optional<ProjectivePoint> CurveChart::preimage(const ProjectivePoint& q) const
{
    if (q.ambient_dim() != ambient_dim()) return std::nullopt;
    std::optional<ProjectivePoint> st;
    if (line_) {
        auto c = line_->coordinates(q.coords());
        if (!c) return std::nullopt;
        st = ProjectivePoint(*c);
    } else {
        auto u = plane_->coordinates(q.coords());
        if (!u) return std::nullopt;
        Vector f = frame_inverse_ * *u;
        if (f[1].is_zero() && f[2].is_zero())
            st = ProjectivePoint(Vector{l_form_[1], -l_form_[0]});
        else
            st = ProjectivePoint(Vector{f[1], f[2]});
    }
    if (at(st->coords()[0], st->coords()[1]) != q) return std::nullopt;
    return st;
}

std::vector<Vector> parametrized_veronese_basis(std::span<const Vector> phi, unsigned deg, unsigned d)
{
    const unsigned n = deg * d;
    // coordinate i as a polynomial in t (s = 1)
    std::vector<std::vector<CPoly>> powers(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        powers[i].push_back(CPoly::constant(Scalar(1)));
        CPoly base(phi[i]);
        for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * base);
    }
    auto mons = monomials(static_cast<unsigned>(phi.size()), d);
    std::vector<Vector> w(n + 1, Vector(mons.size()));
    for (std::size_t a = 0; a < mons.size(); ++a) {
        CPoly prod = CPoly::constant(Scalar(1));
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (mons[a][i]) prod = prod * powers[i][mons[a][i]];
        for (unsigned k = 0; k <= n; ++k) w[k][a] = prod.coeff(k);
    }
    return w;
}

std::vector<Vector> CurveChart::veronese_basis(unsigned d) const
{
    return parametrized_veronese_basis(phi_, degree_, d);
}

std::optional<Vector> curve_coordinates(const Vector& p, const CurveChart& chart, unsigned d)
{
    auto w = chart.veronese_basis(d);
    return Matrix::from_columns(w, p.size()).solve(p);
}

Vector from_curve_coordinates(std::span<const Scalar> c, const CurveChart& chart, unsigned d)
{
    auto w = chart.veronese_basis(d);
    Vector p(w.front().size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (c[k].is_zero()) continue;
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += c[k] * w[k][j];
    }
    return p;
}

std::size_t catalecticant_rank(const HomogeneousForm& f)
{
    const unsigned n = f.num_vars(), d = f.degree();
    auto all = monomials(n, d);
    auto dual = f.dual_coordinates();
    std::map<Exponent, Scalar> value;
    for (std::size_t i = 0; i < all.size(); ++i) value.emplace(all[i], dual[i]);
    auto rows = monomials(n, d / 2), cols = monomials(n, d - d / 2);
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Exponent e(n);
            for (unsigned k = 0; k < n; ++k) e[k] = rows[i][k] + cols[j][k];
            m(i, j) = value.at(e);
        }
    return m.rank();
}

}  // namespace waringlab
