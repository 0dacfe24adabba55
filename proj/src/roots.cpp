#include "waringlab/roots.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace waringlab {

namespace {

constexpr unsigned kGridBits = 320;

Rational from_long_double(long double v)
{
    // Exact binary value of the long double, via two doubles.
    double hi = static_cast<double>(v);
    double lo = static_cast<double>(v - static_cast<long double>(hi));
    return Rational(hi) + Rational(lo);
}

Rational pow2(unsigned bits)
{
    Integer one = 1;
    return Rational(one << bits);
}

}  // namespace

Rational sqrt_upper(const Rational& x)
{
    if (sgn(x) < 0) throw std::domain_error("sqrt_upper of a negative number");
    if (sgn(x) == 0) return 0;
    if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
        return Rational(n, d);
    }
    // sqrt(n/d) <= (isqrt(n * 4^k) + 1) / (isqrt(d * 4^k)) with k large enough to keep precision.
    const unsigned k = 256;
    Integer n = x.get_num() << (2 * k);
    Integer d = x.get_den() << (2 * k);
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rational r(sn + 1, sd);
    r.canonicalize();
    return r;
}

Rational abs_upper(const Scalar& z)
{
    if (z.is_real()) return abs(z.re());
    if (sgn(z.re()) == 0) return abs(z.im());
    return sqrt_upper(z.norm2());
}

Rational round_dyadic(const Rational& x, unsigned bits)
{
    Rational scaled = x * pow2(bits) + Rational(1, 2);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational r(f, Integer(1) << bits);
    r.canonicalize();
    return r;
}

namespace {

// Coarse upward rounding keeps radii short.
Rational round_up(const Rational& x)
{
    if (sgn(x) == 0) return x;
    double m = mpq_get_d(x.get_mpq_t());
    if (m == 0.0) return round_dyadic(x, 1200) + Rational(1, Integer(1) << 1200);
    if (!std::isfinite(m)) return x;
    Rational bound(std::nextafter(m, INFINITY) * (1 + 1e-12));
    while (bound < x) bound *= 2;
    return bound;
}

}  // namespace

bool Ball::contains_zero() const { return center.norm2() <= radius * radius; }

Ball operator+(const Ball& a, const Ball& b) { return {a.center + b.center, a.radius + b.radius}; }
Ball operator-(const Ball& a, const Ball& b) { return {a.center - b.center, a.radius + b.radius}; }
Ball operator*(const Ball& a, const Ball& b)
{
    Rational r = 0;
    if (!a.exact() || !b.exact())
        r = round_up(abs_upper(a.center) * b.radius + abs_upper(b.center) * a.radius + a.radius * b.radius);
    return {a.center * b.center, r};
}

Ball tidy(const Ball& b, unsigned bits)
{
    Scalar c(round_dyadic(b.center.re(), bits), round_dyadic(b.center.im(), bits));
    Scalar shift = c - b.center;
    if (shift.is_zero()) return b;
    return {c, round_up(b.radius + abs_upper(shift))};
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth(const CPoly& p)
{
    const int n = p.degree();
    std::vector<cld> a(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
        a[static_cast<std::size_t>(k)] = cld(mpq_get_d(c.re().get_mpq_t()), mpq_get_d(c.im().get_mpq_t()));
    }
    for (auto& c : a) c /= a.back();
    long double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
    long double radius = std::min<long double>(1 + bound, 1e6L);
    std::vector<cld> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        long double angle = 2 * std::numbers::pi_v<long double> * i / n + 0.4L;
        z[static_cast<std::size_t>(i)] = std::polar(radius * 0.5L + 0.1L, angle);
    }
    auto eval = [&](cld x, cld& dv) {
        cld v = a.back();
        dv = 0;
        for (int k = n - 1; k >= 0; --k) {
            dv = dv * x + v;
            v = v * x + a[static_cast<std::size_t>(k)];
        }
        return v;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0;
        for (int i = 0; i < n; ++i) {
            cld dv;
            cld v = eval(z[static_cast<std::size_t>(i)], dv);
            if (v == cld(0)) continue;
            cld ratio = v / dv;
            cld sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0L / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            cld step = ratio / (1.0L - ratio * sum);
            z[static_cast<std::size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step) / (1 + std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

Scalar round_scalar(const Scalar& z, unsigned bits)
{
    return Scalar(round_dyadic(z.re(), bits), round_dyadic(z.im(), bits));
}

// Tries to recognise a Gaussian rational root inside the disk.
std::optional<Scalar> exact_root_near(const CPoly& p, const Scalar& c, const Rational& r)
{
    Scalar guess(simplest_between(c.re() - r, c.re() + r), simplest_between(c.im() - r, c.im() + r));
    if ((guess - c).norm2() <= r * r && p(guess).is_zero()) return guess;
    return std::nullopt;
}

}  // namespace

std::vector<Ball> isolate_complex_roots(const CPoly& p, const Rational& max_radius)
{
    const int n = p.degree();
    if (n < 1) return {};
    if (n == 1) return {Ball{-p.coeffs()[0] / p.coeffs()[1], 0}};

    std::vector<Scalar> z;
    for (const auto& w : aberth(p)) z.emplace_back(from_long_double(w.real()), from_long_double(w.imag()));
    const CPoly dp = p.derivative();

    for (int attempt = 0; attempt < 6; ++attempt) {
        // Newton polishing on a dyadic grid.
        for (int it = 0; it < 4 + 2 * attempt; ++it)
            for (auto& zi : z) {
                Scalar d = dp(zi);
                if (d.is_zero()) continue;
                zi = round_scalar(zi - p(zi) / d, kGridBits + 64 * static_cast<unsigned>(attempt));
            }

        std::vector<Rational> radius(static_cast<std::size_t>(n));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Scalar denom = p.lead();
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (denom.is_zero()) {
                ok = false;
                break;
            }
            Scalar w = p(z[static_cast<std::size_t>(i)]) / denom;
            radius[static_cast<std::size_t>(i)] = Rational(n) * abs_upper(w);
            if (radius[static_cast<std::size_t>(i)] > max_radius) ok = false;
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                Rational sum = radius[static_cast<std::size_t>(i)] + radius[static_cast<std::size_t>(j)];
                if ((z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]).norm2() <= sum * sum) ok = false;
            }
        if (!ok) continue;

        std::vector<Ball> out;
        for (int i = 0; i < n; ++i) {
            const auto& c = z[static_cast<std::size_t>(i)];
            const auto& r = radius[static_cast<std::size_t>(i)];
            if (auto e = exact_root_near(p, c, r))
                out.push_back({*e, 0});
            else
                out.push_back({c, r});
        }
        return out;
    }
    throw std::runtime_error("complex root isolation failed to certify");
}

std::optional<std::vector<Ball>> enclose_linear_solution(const std::vector<std::vector<Ball>>& a,
                                                         std::span<const Scalar> b)
{
    const std::size_t n = a.size();
    Matrix mid(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) mid(r, c) = a[r][c].center;
    auto inv = mid.inverse();
    if (!inv) return std::nullopt;
    Matrix R(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) R(r, c) = round_scalar((*inv)(r, c), kGridBits);
    Vector approx = *inv * b;
    for (auto& x : approx) x = round_scalar(x, kGridBits);

    // x = approx + e with |e| <= |R (b - A approx)| / (1 - |I - R A|) in the infinity norm.
    Rational beta = 0;
    Rational resid = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Ball acc{i == j ? Scalar(1) : Scalar(), 0};
            for (std::size_t k = 0; k < n; ++k) acc = acc - Ball{R(i, k), 0} * a[k][j];
            row_sum += abs_upper(acc.center) + acc.radius;
        }
        beta = std::max(beta, row_sum);

        Ball ri{Scalar(), 0};
        for (std::size_t k = 0; k < n; ++k) {
            Ball rk{b[k], 0};
            for (std::size_t j = 0; j < n; ++j) rk = rk - a[k][j] * Ball{approx[j], 0};
            ri = ri + Ball{R(i, k), 0} * rk;
        }
        resid = std::max(resid, Rational(abs_upper(ri.center) + ri.radius));
    }
    if (beta >= 1) return std::nullopt;
    Rational err = round_up(resid / (1 - beta));
    std::vector<Ball> out;
    for (auto& x : approx) out.push_back({x, err});
    return out;
}

}  // namespace waringlab
