#include "waringlab/upoly.hpp"

namespace waringlab {

CPoly to_complex(const QPoly& p)
{
    std::vector<Scalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return CPoly(std::move(c));
}

std::optional<QPoly> to_rational(const CPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& s : p.coeffs()) {
        if (!s.is_real()) return std::nullopt;
        c.push_back(s.re());
    }
    return QPoly(std::move(c));
}

SturmSequence::SturmSequence(const QPoly& p)
{
    if (p.is_zero()) return;
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero()) {
        QPoly r = QPoly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(Rational(-1) * r);
    }
    if (chain_.back().is_zero()) chain_.pop_back();
}

namespace {

int count_variations(const std::vector<int>& signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int SturmSequence::variations(const Rational& x) const
{
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(sgn(p(x)));
    return count_variations(s);
}

int SturmSequence::variations_at_infinity(bool positive) const
{
    std::vector<int> s;
    for (const auto& p : chain_) {
        int lead = sgn(p.lead());
        if (!positive && p.degree() % 2 == 1) lead = -lead;
        s.push_back(lead);
    }
    return count_variations(s);
}

int SturmSequence::count_real_roots() const
{
    if (chain_.empty()) return 0;
    return variations_at_infinity(false) - variations_at_infinity(true);
}

int SturmSequence::count_in(const Rational& lo, const Rational& hi) const
{
    if (chain_.empty()) return 0;
    return variations(lo) - variations(hi);
}

Rational cauchy_bound(const QPoly& p)
{
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = abs(p.coeff(static_cast<std::size_t>(k)) / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

void isolate(const QPoly& p, const SturmSequence& sturm, const Rational& lo, const Rational& hi, int count,
             std::vector<RealRootInterval>& out)
{
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    int left = sturm.count_in(lo, mid);
    isolate(p, sturm, lo, mid, left, out);
    isolate(p, sturm, mid, hi, count - left, out);
}

}  // namespace

std::vector<RealRootInterval> isolate_real_roots(const QPoly& p)
{
    std::vector<RealRootInterval> raw;
    if (p.degree() < 1) return raw;
    SturmSequence sturm(p);
    Rational b = cauchy_bound(p);
    isolate(p, sturm, -b, b, sturm.count_in(-b, b), raw);
    // A root sitting on a right endpoint is exact; report it as a degenerate interval.
    std::vector<RealRootInterval> out;
    for (auto& iv : raw) {
        if (sgn(p(iv.hi)) == 0)
            out.push_back({iv.hi, iv.hi});
        else
            out.push_back(iv);
    }
    return out;
}

RealRootInterval refine_real_root(const QPoly& p, RealRootInterval iv, const Rational& width)
{
    if (iv.exact()) return iv;
    // The root lies in (lo, hi]; p may vanish at lo when lo is a neighbouring exact root.
    int s_hi = sgn(p(iv.hi));
    if (s_hi == 0) return {iv.hi, iv.hi};
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = sgn(p(mid));
        if (s == 0) return {mid, mid};
        if (s == s_hi)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (lo > hi) return simplest_between(hi, lo);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(c) <= hi) return Rational(c);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
    Rational r = Rational(f) + 1 / inner;
    r.canonicalize();
    return r;
}

}  // namespace waringlab
