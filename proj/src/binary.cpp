#include "waringlab/binary.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace waringlab {

namespace {

bool all_real(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_real(); });
}

Rational pow2_inv(unsigned bits) { return Rational(Integer(1), Integer(1) << bits); }

// Degree of g as a binary form minus the degree of g(t): multiplicity of [0:1].
unsigned infinity_multiplicity(const ApolarForm& g, int degree_t)
{
    return static_cast<unsigned>(static_cast<int>(g.size()) - 1 - degree_t);
}

QPoly real_poly(const ApolarForm& g)
{
    auto q = to_rational(CPoly(g));
    if (!q) throw Error("apolar form is not real");
    return *q;
}

ApolarForm combine_basis(const std::vector<ApolarForm>& basis, std::span<const long> a)
{
    ApolarForm g(basis.front().size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) g[j] += Scalar(a[i]) * basis[i][j];
    }
    return g;
}

// Common factor of all kernel forms: monic gcd of the g(t) and the least multiplicity at [0:1].
struct CommonFactor {
    CPoly finite;
    unsigned at_infinity = 0;
};

CommonFactor common_factor(const std::vector<ApolarForm>& basis)
{
    CommonFactor c;
    c.at_infinity = static_cast<unsigned>(basis.front().size());
    for (const auto& g : basis) {
        CPoly p(g);
        c.finite = CPoly::gcd(c.finite, p);
        c.at_infinity = std::min(c.at_infinity, infinity_multiplicity(g, p.degree()));
    }
    return c;
}

bool factor_squarefree(const CommonFactor& c) { return c.at_infinity <= 1 && c.finite.is_squarefree(); }

bool factor_real_split(const CommonFactor& c)
{
    if (!factor_squarefree(c)) return false;
    auto q = to_rational(c.finite);
    return q && SturmSequence(*q).count_real_roots() == q->degree();
}

// Rational root in the isolating interval, when there is one.
std::optional<Rational> rational_root(const QPoly& p, RealRootInterval iv)
{
    if (iv.exact()) return iv.lo;
    // a root a/b of an integer polynomial has b | lead; fractions with denominators
    // at most B are separated by 1/B^2.
    Integer lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Rational lead = p.lead() * lcm;
    Rational bound = abs(lead);
    Rational width = 1 / (2 * bound * bound);
    iv = refine_real_root(p, iv, width);
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (iv.exact()) return iv.lo;
        Rational q = simplest_between(iv.lo, iv.hi);
        if (q != iv.lo) {
            if (sgn(p(q)) == 0) return q;
            return std::nullopt;
        }
        iv = refine_real_root(p, iv, (iv.hi - iv.lo) / 4);
    }
    return std::nullopt;
}

std::vector<Ball> real_root_balls(const QPoly& p, unsigned bits)
{
    std::vector<Ball> out;
    for (auto iv : isolate_real_roots(p)) {
        if (auto r = rational_root(p, iv)) {
            out.push_back({Scalar(*r), 0});
            continue;
        }
        iv = refine_real_root(p, iv, pow2_inv(bits));
        out.push_back({Scalar((iv.lo + iv.hi) / 2), (iv.hi - iv.lo) / 2});
    }
    return out;
}

Ball ball_pow(const Ball& z, unsigned k)
{
    Ball r{Scalar(1), 0};
    for (unsigned i = 0; i < k; ++i) r = r * z;
    return r;
}

std::vector<ProjectivePoint> candidate_roots(unsigned height)
{
    // [0:1] first, then rationals by height.
    std::vector<ProjectivePoint> out{ProjectivePoint(Vector{Scalar(0), Scalar(1)})};
    out.push_back(ProjectivePoint(Vector{Scalar(1), Scalar(0)}));
    for (long h = 1; h <= static_cast<long>(height); ++h)
        for (long q = 1; q <= h; ++q)
            for (long p = 1; p <= h; ++p) {
                if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
                Rational z(p, q);
                out.push_back(ProjectivePoint(Vector{Scalar(1), Scalar(z)}));
                out.push_back(ProjectivePoint(Vector{Scalar(1), Scalar(Rational(-z))}));
            }
    return out;
}

// Visits size-k subsets of {0..n-1} by increasing largest element; stops when fn
// returns true or the budget runs out.
bool for_each_subset(std::size_t n, std::size_t k, std::size_t budget,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn)
{
    if (k == 0) return fn({});
    std::size_t used = 0;
    std::vector<std::size_t> cur(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t limit) -> bool {
        if (pos == 0) {
            if (used++ >= budget) return true;
            return fn(cur);
        }
        for (std::size_t v = pos - 1; v < limit; ++v) {
            cur[pos - 1] = v;
            if (rec(pos - 1, v)) return true;
        }
        return false;
    };
    for (std::size_t top = k - 1; top < n; ++top) {
        cur[k - 1] = top;
        if (rec(k - 1, top)) return used <= budget;
        if (used >= budget) return false;
    }
    return false;
}

bool in_kernel(const BinaryForm& f, const ApolarForm& g)
{
    const unsigned d = f.degree();
    const std::size_t r = g.size() - 1;
    if (r > d) return true;
    for (std::size_t i = 0; i + r <= d; ++i) {
        Scalar s;
        for (std::size_t j = 0; j <= r; ++j) s += f.scaled()[i + j] * g[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

// Value conditions g(point) = 0 on the coefficients of a kernel combination.
Vector root_condition(const std::vector<ApolarForm>& basis, const ProjectivePoint& pt)
{
    const Scalar& s = pt.coords()[0];
    const Scalar& t = pt.coords()[1];
    const std::size_t r = basis.front().size() - 1;
    Vector row;
    for (const auto& g : basis) {
        Scalar v;
        for (std::size_t j = 0; j <= r; ++j) v += g[j] * pow(s, static_cast<unsigned>(r - j)) * pow(t, static_cast<unsigned>(j));
        row.push_back(v);
    }
    return row;
}

// Homogeneous discriminant of the pencil g1 + lambda g2 (up to a constant), as a
// polynomial in lambda: resultant of the two partial derivatives.
QPoly pencil_discriminant(const ApolarForm& g1, const ApolarForm& g2)
{
    const std::size_t r = g1.size() - 1;
    const std::size_t n = 2 * r - 2;
    auto disc_at = [&](const Rational& lam) {
        Vector g(r + 1);
        for (std::size_t j = 0; j <= r; ++j) g[j] = g1[j] + Scalar(lam) * g2[j];
        Vector ds(r), dt(r);
        for (std::size_t j = 0; j < r; ++j) ds[j] = Scalar(static_cast<long>(r - j)) * g[j];
        for (std::size_t j = 1; j <= r; ++j) dt[j - 1] = Scalar(static_cast<long>(j)) * g[j];
        Matrix syl(n, n);
        for (std::size_t i = 0; i + 1 < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                syl(i, i + j) = ds[j];
                syl(r - 1 + i, i + j) = dt[j];
            }
        return syl.determinant().re();
    };
    // Newton interpolation through lambda = 0..n.
    std::vector<Rational> xs, coef;
    for (std::size_t i = 0; i <= n; ++i) {
        xs.emplace_back(static_cast<long>(i));
        coef.push_back(disc_at(xs.back()));
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    QPoly out = QPoly::constant(coef[n]);
    for (std::size_t i = n; i-- > 0;) out = out * QPoly::linear_root(xs[i]) + QPoly::constant(coef[i]);
    return out;
}

// Points strictly between consecutive real roots of p, plus one beyond each end.
std::vector<Rational> cell_samples(const QPoly& p)
{
    if (p.degree() <= 0) return {Rational(0)};
    QPoly sf = QPoly::divmod(p, QPoly::gcd(p, p.derivative())).first;
    auto iv = isolate_real_roots(sf);
    if (iv.empty()) return {Rational(0)};
    for (std::size_t i = 0; i + 1 < iv.size(); ++i)
        while (!(iv[i].hi < iv[i + 1].lo)) {
            if (!iv[i].exact()) iv[i] = refine_real_root(sf, iv[i], (iv[i].hi - iv[i].lo) / 2);
            if (!iv[i + 1].exact()) iv[i + 1] = refine_real_root(sf, iv[i + 1], (iv[i + 1].hi - iv[i + 1].lo) / 2);
        }
    std::vector<Rational> out{iv.front().lo - 1};
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) out.push_back((iv[i].hi + iv[i + 1].lo) / 2);
    out.push_back(iv.back().hi + 1);
    return out;
}

}  // namespace

BinaryForm::BinaryForm(Vector scaled) : c_(std::move(scaled))
{
    if (c_.empty()) throw Error("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::from_homogeneous(const HomogeneousForm& f)
{
    if (f.num_vars() != 2) throw Error("binary form needs exactly two variables");
    return BinaryForm(f.dual_coordinates());
}

HomogeneousForm BinaryForm::to_homogeneous() const { return HomogeneousForm::from_dual_coordinates(2, degree(), c_); }

bool BinaryForm::is_real() const { return all_real(c_); }

bool BinaryForm::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<ApolarForm> hankel_kernel(const BinaryForm& f, unsigned r)
{
    const unsigned d = f.degree();
    const std::size_t rows = r <= d ? d - r + 1 : 0;
    Matrix h(rows, r + 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j <= r; ++j) h(i, j) = f.scaled()[i + j];
    return h.kernel();
}

bool apolar_squarefree(const ApolarForm& g)
{
    CPoly p(g);
    if (p.is_zero()) return false;
    if (infinity_multiplicity(g, p.degree()) > 1) return false;
    return p.is_squarefree();
}

bool apolar_real_split(const ApolarForm& g)
{
    if (!all_real(g) || !apolar_squarefree(g)) return false;
    QPoly q = real_poly(g);
    return SturmSequence(q).count_real_roots() == q.degree();
}

ApolarForm apolar_from_points(std::span<const ProjectivePoint> points)
{
    CPoly p = CPoly::constant(Scalar(1));
    for (const auto& pt : points) {
        if (pt.ambient_dim() != 1) throw Error("apolar form needs points of P^1");
        p = p * CPoly(Vector{pt.coords()[1], -pt.coords()[0]});
    }
    ApolarForm g(points.size() + 1);
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = p.coeff(j);
    return g;
}

std::vector<ProjectivePoint> BinaryDecomposition::exact_points() const
{
    if (!exact) throw Error("decomposition points are not exact");
    std::vector<ProjectivePoint> out;
    for (const auto& z : roots) out.push_back(ProjectivePoint(Vector{Scalar(1), z.center}));
    if (at_infinity) out.push_back(ProjectivePoint(Vector{Scalar(0), Scalar(1)}));
    return out;
}

Vector BinaryDecomposition::exact_coeffs() const
{
    if (!exact) throw Error("decomposition coefficients are not exact");
    Vector out;
    for (const auto& c : coeffs) out.push_back(c.center);
    return out;
}

bool check_reconstruction(const BinaryForm& f, const BinaryDecomposition& dec, const Rational& max_width,
                          Rational* width)
{
    const unsigned d = f.degree();
    Rational worst = 0;
    bool ok = true;
    for (unsigned k = 0; k <= d; ++k) {
        Ball acc{-f.scaled()[k], 0};
        for (std::size_t j = 0; j < dec.roots.size(); ++j) acc = acc + dec.coeffs[j] * ball_pow(dec.roots[j], k);
        if (dec.at_infinity && k == d) acc = acc + dec.coeffs.back();
        worst = std::max(worst, acc.radius);
        if (dec.exact ? !acc.center.is_zero() : !acc.contains_zero()) ok = false;
    }
    if (width) *width = 2 * worst;
    if (dec.exact) return ok && sgn(worst) == 0;
    return ok && 2 * worst < max_width;
}

BinaryDecomposition decompose_with(const BinaryForm& f, const ApolarForm& g, FieldTag field)
{
    if (!apolar_squarefree(g)) throw Error("decomposition needs a square-free apolar form");
    const unsigned d = f.degree();
    BinaryDecomposition dec;
    dec.rank = static_cast<unsigned>(g.size()) - 1;
    dec.field = field;
    dec.generator = g;
    CPoly p(g);
    dec.at_infinity = p.degree() < static_cast<int>(dec.rank);
    if (dec.rank > d + 1) throw Error("apolar form degree exceeds d + 1");

    const Rational target = Rational(1, Integer("1000000000000000000000000000000"));
    for (unsigned bits = 200; bits <= 3200; bits *= 2) {
        if (field == FieldTag::Rational)
            dec.roots = real_root_balls(real_poly(g), bits);
        else
            dec.roots = isolate_complex_roots(p, pow2_inv(bits));
        if (static_cast<int>(dec.roots.size()) != p.degree()) throw Error("root isolation lost roots");
        std::sort(dec.roots.begin(), dec.roots.end(), [](const Ball& a, const Ball& b) { return a.center < b.center; });
        dec.exact = std::all_of(dec.roots.begin(), dec.roots.end(), [](const Ball& b) { return b.exact(); });

        const std::size_t r = dec.rank;
        if (dec.exact) {
            std::vector<Vector> cols;
            for (const auto& z : dec.roots) {
                Vector col;
                for (unsigned k = 0; k <= d; ++k) col.push_back(pow(z.center, k));
                cols.push_back(std::move(col));
            }
            if (dec.at_infinity) {
                Vector col(d + 1);
                col[d] = Scalar(1);
                cols.push_back(std::move(col));
            }
            auto lam = Matrix::from_columns(cols, d + 1).solve(f.scaled());
            if (!lam) throw Error("apolar form does not support a decomposition");
            dec.coeffs.clear();
            for (auto& x : *lam) dec.coeffs.push_back({x, 0});
            dec.residual_radius = 0;
            return dec;
        }

        // square subsystem: rows 0..r-1, or rows 0..r-2 and d with the point [0:1]
        std::vector<unsigned> rows;
        for (unsigned k = 0; k < r - (dec.at_infinity ? 1 : 0); ++k) rows.push_back(k);
        if (dec.at_infinity) rows.push_back(d);
        std::vector<std::vector<Ball>> a;
        Vector b;
        for (auto k : rows) {
            std::vector<Ball> row;
            for (const auto& z : dec.roots) row.push_back(ball_pow(z, k));
            if (dec.at_infinity) row.push_back({Scalar(k == d ? 1 : 0), 0});
            a.push_back(std::move(row));
            b.push_back(f.scaled()[k]);
        }
        auto lam = enclose_linear_solution(a, b);
        if (!lam) continue;
        dec.coeffs = *lam;
        Rational width;
        bool ok = check_reconstruction(f, dec, target, &width);
        dec.residual_radius = width / 2;
        if (ok) return dec;
    }
    throw Error("could not certify the decomposition to the required width");
}

const char* to_string(RankStep s)
{
    switch (s) {
    case RankStep::Found: return "found";
    case RankStep::NoKernel: return "no_kernel";
    case RankStep::GcdExcluded: return "excluded_common_factor";
    case RankStep::GeneratorExcluded: return "excluded_generator";
    case RankStep::PencilExcluded: return "excluded_pencil";
    case RankStep::Gap: return "uncertified_gap";
    }
    return "?";
}

RankResult complex_rank(const BinaryForm& f)
{
    if (f.is_zero()) throw Error("rank of the zero form");
    const unsigned d = f.degree();
    RankResult res;
    for (unsigned r = 1; r <= d + 1; ++r) {
        auto ker = hankel_kernel(f, r);
        if (ker.empty()) {
            res.steps.emplace_back(r, RankStep::NoKernel);
            continue;
        }
        std::optional<ApolarForm> found;
        if (ker.size() == 1) {
            if (apolar_squarefree(ker[0])) found = ker[0];
            else res.steps.emplace_back(r, RankStep::GeneratorExcluded);
        } else if (!factor_squarefree(common_factor(ker))) {
            res.steps.emplace_back(r, RankStep::GcdExcluded);
        } else {
            // a square-free member exists; the bad members form a proper subvariety
            std::vector<long> a(ker.size());
            for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(i + 1);
            std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ r);
            for (int attempt = 0; attempt < 100000 && !found; ++attempt) {
                auto g = combine_basis(ker, a);
                if (apolar_squarefree(g)) found = g;
                long h = 2 + attempt / 50;
                for (auto& x : a) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h;
            }
            if (!found) throw Error("no square-free kernel member found although one exists");
        }
        if (found) {
            res.rank = r;
            res.steps.emplace_back(r, RankStep::Found);
            res.decomposition = decompose_with(f, *found, FieldTag::GaussianRational);
            return res;
        }
    }
    throw Error("complex rank exceeds d + 1");
}

RankResult real_rank(const BinaryForm& f, std::span<const ProjectivePoint> hints)
{
    if (f.is_zero()) throw Error("rank of the zero form");
    if (!f.is_real()) throw Error("real rank of a non-real form");
    const unsigned d = f.degree();
    RankResult cr = complex_rank(f);
    RankResult res;
    res.steps.assign(cr.steps.begin(), cr.steps.end() - 1);
    static const auto candidates = candidate_roots(12);

    for (unsigned r = cr.rank; r <= d + 1; ++r) {
        auto ker = hankel_kernel(f, r);
        std::optional<ApolarForm> found;
        RankStep verdict = RankStep::Gap;
        if (ker.empty()) {
            verdict = RankStep::NoKernel;
        } else if (!factor_real_split(common_factor(ker))) {
            verdict = RankStep::GcdExcluded;
        } else if (ker.size() == 1) {
            if (apolar_real_split(ker[0])) found = ker[0];
            else verdict = RankStep::GeneratorExcluded;
        } else {
            if (hints.size() >= r) {
                for_each_subset(hints.size(), r, 5000, [&](const std::vector<std::size_t>& idx) {
                    std::vector<ProjectivePoint> pts;
                    for (auto i : idx) pts.push_back(hints[i]);
                    auto g = apolar_from_points(pts);
                    if (in_kernel(f, g) && apolar_real_split(g)) found = g;
                    return found.has_value();
                });
            }
            if (!found && ker.size() == 2) {
                if (apolar_real_split(ker[1])) found = ker[1];
                auto disc = pencil_discriminant(ker[0], ker[1]);
                if (!found && !disc.is_zero())
                    for (const auto& lam : cell_samples(disc)) {
                        Vector g(ker[0].size());
                        for (std::size_t j = 0; j < g.size(); ++j) g[j] = ker[0][j] + Scalar(lam) * ker[1][j];
                        if (apolar_real_split(g)) {
                            found = g;
                            break;
                        }
                    }
                if (!found) verdict = RankStep::PencilExcluded;
            } else if (!found) {
                const std::size_t k = ker.size();
                for_each_subset(candidates.size(), k - 1, 4000, [&](const std::vector<std::size_t>& idx) {
                    std::vector<Vector> rows;
                    for (auto i : idx) rows.push_back(root_condition(ker, candidates[i]));
                    auto sol = Matrix::from_rows(rows, k).kernel();
                    if (sol.size() != 1) return false;
                    ApolarForm g(ker.front().size());
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < g.size(); ++j) g[j] += sol[0][i] * ker[i][j];
                    if (apolar_real_split(g)) found = g;
                    return found.has_value();
                });
                std::mt19937_64 rng(0x243f6a8885a308d3ULL ^ r);
                std::vector<long> a(k);
                for (int attempt = 0; attempt < 2000 && !found; ++attempt) {
                    for (auto& x : a) x = static_cast<long>(rng() % 25) - 12;
                    auto g = combine_basis(ker, a);
                    if (apolar_real_split(g)) found = g;
                }
            }
        }
        if (found) {
            res.rank = r;
            res.steps.emplace_back(r, RankStep::Found);
            res.decomposition = decompose_with(f, *found, FieldTag::Rational);
            return res;
        }
        res.steps.emplace_back(r, verdict);
        if (verdict == RankStep::Gap) res.certified = false;
    }
    throw Error("real rank exceeds d + 1");
}

BinaryForm pullback_conic(const HomogeneousForm& f, std::span<const Vector> phi)
{
    if (phi.size() != f.num_vars()) throw Error("parametrization has the wrong number of coordinates");
    CPoly common;
    bool all_vanish_at_infinity = true;
    for (const auto& q : phi) {
        if (q.size() != 3) throw Error("parametrization coordinates must be binary quadrics");
        common = CPoly::gcd(common, CPoly(q));
        if (!q[2].is_zero()) all_vanish_at_infinity = false;
    }
    if (common.degree() != 0 || all_vanish_at_infinity) throw Error("degenerate parametrization: coordinates share a root");

    const unsigned d = f.degree();
    std::vector<std::vector<CPoly>> powers(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        powers[i].push_back(CPoly::constant(Scalar(1)));
        for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * CPoly(phi[i]));
    }
    CPoly total;
    for (const auto& [alpha, c] : f.terms()) {
        CPoly term = CPoly::constant(c);
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (alpha[i]) term = term * powers[i][alpha[i]];
        total = total + term;
    }
    Vector scaled(2 * d + 1);
    for (unsigned k = 0; k <= 2 * d; ++k) scaled[k] = total.coeff(k) / Scalar(Rational(binomial(2 * d, k)));
    return BinaryForm(std::move(scaled));
}

}  // namespace waringlab
