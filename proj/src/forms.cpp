#include "waringlab/forms.hpp"

#include <algorithm>
#include <numeric>

namespace waringlab {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return b < a;
}

namespace {

void enumerate(unsigned var, unsigned remaining, Exponent& cur, std::vector<Exponent>& out)
{
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        enumerate(var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Exponent> monomials(unsigned num_vars, unsigned d)
{
    std::vector<Exponent> out;
    if (num_vars == 0) return out;
    Exponent cur(num_vars, 0);
    enumerate(0, d, cur, out);
    return out;
}

Integer multinomial(const Exponent& alpha)
{
    Integer r = 1;
    unsigned total = 0;
    for (unsigned a : alpha) {
        total += a;
        r *= binomial(total, a);
    }
    return r;
}

Scalar monomial_value(const Exponent& alpha, std::span<const Scalar> point)
{
    Scalar v(1);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i]) v *= pow(point[i], alpha[i]);
    return v;
}

std::vector<Scalar> canonical_scaling(std::vector<Scalar> coords)
{
    auto it = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == coords.end()) throw Error("all coordinates are zero");
    Scalar inv = it->inverse();
    for (auto& c : coords) c *= inv;
    return coords;
}

LinearForm::LinearForm(std::vector<Scalar> coeffs) : coeffs_(canonical_scaling(std::move(coeffs))) {}

bool LinearForm::is_real() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_real(); });
}

LinearForm LinearForm::conj() const
{
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& s : coeffs_) c.push_back(s.conj());
    return LinearForm(std::move(c));
}

Scalar LinearForm::evaluate(std::span<const Scalar> point) const
{
    if (point.size() != coeffs_.size()) throw Error("linear form evaluated at point of wrong dimension");
    Scalar v;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * point[i];
    return v;
}

HomogeneousForm::HomogeneousForm(unsigned num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree)
{
    if (num_vars == 0) throw Error("form needs at least one variable");
}

HomogeneousForm::HomogeneousForm(unsigned num_vars, unsigned degree, Terms terms)
    : HomogeneousForm(num_vars, degree)
{
    for (auto& [alpha, c] : terms) {
        if (alpha.size() != num_vars) throw Error("exponent vector has wrong length");
        if (std::accumulate(alpha.begin(), alpha.end(), 0u) != degree)
            throw Error("exponent vector does not sum to the degree");
        if (!c.is_zero()) terms_.emplace(alpha, std::move(c));
    }
}

bool HomogeneousForm::is_real() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

Scalar HomogeneousForm::coeff(const Exponent& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar HomogeneousForm::evaluate(std::span<const Scalar> point) const
{
    if (point.size() != num_vars_) throw Error("form evaluated at point of wrong dimension");
    Scalar v;
    for (const auto& [alpha, c] : terms_) v += c * monomial_value(alpha, point);
    return v;
}

std::vector<Scalar> HomogeneousForm::dual_coordinates() const
{
    auto mons = monomials(num_vars_, degree_);
    std::vector<Scalar> out;
    out.reserve(mons.size());
    for (const auto& alpha : mons) {
        auto it = terms_.find(alpha);
        if (it == terms_.end())
            out.emplace_back();
        else
            out.push_back(it->second / Scalar(Rational(multinomial(alpha))));
    }
    return out;
}

HomogeneousForm HomogeneousForm::from_dual_coordinates(unsigned num_vars, unsigned degree,
                                                       std::span<const Scalar> coords)
{
    auto mons = monomials(num_vars, degree);
    if (coords.size() != mons.size()) throw Error("dual coordinate vector has wrong length");
    Terms terms;
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (!coords[i].is_zero()) terms.emplace(mons[i], coords[i] * Scalar(Rational(multinomial(mons[i]))));
    return HomogeneousForm(num_vars, degree, std::move(terms));
}

void HomogeneousForm::check_compatible(const HomogeneousForm& o) const
{
    if (o.num_vars_ != num_vars_ || o.degree_ != degree_) throw Error("forms of different shape");
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& o)
{
    check_compatible(o);
    for (const auto& [alpha, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& o)
{
    HomogeneousForm neg = o;
    neg *= Scalar(-1);
    return *this += neg;
}

HomogeneousForm& HomogeneousForm::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms_) v *= c;
    return *this;
}

HomogeneousForm power_of_linear(const LinearForm& L, unsigned d)
{
    if (d == 0) throw Error("power_of_linear needs d >= 1");
    const auto n = static_cast<unsigned>(L.num_vars());
    HomogeneousForm::Terms terms;
    for (auto& alpha : monomials(n, d)) {
        Scalar c = monomial_value(alpha, L.coeffs());
        if (c.is_zero()) continue;
        c *= Scalar(Rational(multinomial(alpha)));
        terms.emplace(std::move(alpha), std::move(c));
    }
    return HomogeneousForm(n, d, std::move(terms));
}

HomogeneousForm combine(std::span<const std::pair<Scalar, LinearForm>> terms, unsigned d)
{
    if (terms.empty()) throw Error("combine needs at least one term");
    const auto n = static_cast<unsigned>(terms.front().second.num_vars());
    HomogeneousForm out(n, d);
    for (const auto& [c, L] : terms) {
        if (L.num_vars() != n) throw Error("linear forms in different numbers of variables");
        out += c * power_of_linear(L, d);
    }
    return out;
}

HomogeneousForm conjugate_form(const HomogeneousForm& f)
{
    HomogeneousForm::Terms terms;
    for (const auto& [alpha, c] : f.terms()) terms.emplace(alpha, c.conj());
    return HomogeneousForm(f.num_vars(), f.degree(), std::move(terms));
}

}  // namespace waringlab
