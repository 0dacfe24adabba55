#include "doctest.h"
#include "test_support.hpp"

#include "waringlab/forms.hpp"

using namespace waringlab;
using waringlab::testing::Gen;
using waringlab::testing::S;

namespace {

// Coefficients of x^d, x^{d-1}y, ..., y^d.
HomogeneousForm binary(std::initializer_list<Scalar> coeffs)
{
    unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
    HomogeneousForm::Terms t;
    unsigned k = 0;
    for (const auto& c : coeffs) {
        t.emplace(Exponent{d - k, k}, c);
        ++k;
    }
    return HomogeneousForm(2, d, std::move(t));
}

// Independent oracle: (L(q))^d by repeated multiplication.
Scalar power_value(const LinearForm& L, std::span<const Scalar> q, unsigned d)
{
    Scalar v;
    for (std::size_t i = 0; i < q.size(); ++i) v += L.coeffs()[i] * q[i];
    Scalar r(1);
    for (unsigned k = 0; k < d; ++k) r *= v;
    return r;
}

}  // namespace

TEST_CASE("rationals are normalized and serialize as p/q")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7/1");
    CHECK(to_string(parse_rational("0/5")) == "0/1");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("scalar arithmetic is exact and conjugation is an involution")
{
    Scalar a(Rational(1, 2), Rational(-3, 4));
    Scalar b(Rational(2), Rational(5, 3));
    CHECK(a * b / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK((a * a.conj()).re() == a.norm2());
    CHECK(Scalar::i() * Scalar::i() == S(-1));
    CHECK(S(3).is_real());
    CHECK_FALSE(a.is_real());
    CHECK(a.field() == FieldTag::GaussianRational);
    CHECK_THROWS(Scalar().inverse());
}

TEST_CASE("monomials follow graded lex order")
{
    auto mons = monomials(3, 2);
    REQUIRE(mons.size() == 6);
    CHECK(mons[0] == Exponent{2, 0, 0});
    CHECK(mons[1] == Exponent{1, 1, 0});
    CHECK(mons[2] == Exponent{1, 0, 1});
    CHECK(mons[3] == Exponent{0, 2, 0});
    CHECK(mons[5] == Exponent{0, 0, 2});
    CHECK(monomials(5, 6).size() == 210);
    CHECK(multinomial(Exponent{1, 1, 1}) == 6);
    CHECK(multinomial(Exponent{2, 0, 1}) == 3);
}

TEST_CASE("linear forms are stored with first nonzero coefficient one")
{
    LinearForm L({S(0), S(2), S(4)});
    CHECK(L.coeffs() == std::vector<Scalar>{S(0), S(1), S(2)});
    CHECK(LinearForm({S(0), S(3)}) == LinearForm({S(0), S(1)}));
    CHECK_THROWS_AS(LinearForm({S(0), S(0)}), Error);
}

TEST_CASE("power_of_linear examples")
{
    SUBCASE("x^3")
    {
        CHECK(power_of_linear(LinearForm({S(1), S(0)}), 3) == binary({S(1), S(0), S(0), S(0)}));
    }
    SUBCASE("(x+y)^2")
    {
        CHECK(power_of_linear(LinearForm({S(1), S(1)}), 2) == binary({S(1), S(2), S(1)}));
    }
    SUBCASE("(x+iy)^3 against the evaluation oracle")
    {
        LinearForm L({S(1), S(0, 1)});
        HomogeneousForm expected = binary({S(1), S(0, 3), S(-3), S(0, -1)});
        HomogeneousForm got = power_of_linear(L, 3);
        CHECK(got == expected);
        Gen g(11);
        for (int k = 0; k < 5; ++k) {
            auto q = g.vector(2, true);
            CHECK(got.evaluate(q) == power_value(L, q, 3));
            CHECK(expected.evaluate(q) == power_value(L, q, 3));
        }
    }
    CHECK_THROWS_AS(power_of_linear(LinearForm({S(1)}), 0), Error);
}

TEST_CASE("combine examples")
{
    LinearForm x({S(1), S(0)}), y({S(0), S(1)});
    std::vector<std::pair<Scalar, LinearForm>> t1{{S(1), x}, {S(1), y}};
    CHECK(combine(t1, 3) == binary({S(1), S(0), S(0), S(1)}));

    HomogeneousForm target = binary({S(2), S(0), S(-6), S(0)});
    std::vector<std::pair<Scalar, LinearForm>> conj_pair{{S(1), LinearForm({S(1), S(0, 1)})},
                                                         {S(1), LinearForm({S(1), S(0, -1)})}};
    CHECK(combine(conj_pair, 3) == target);

    std::vector<std::pair<Scalar, LinearForm>> real3{
        {S(4), x}, {S(-1), LinearForm({S(1), S(1)})}, {S(-1), LinearForm({S(1), S(-1)})}};
    CHECK(combine(real3, 3) == target);

    std::vector<std::pair<Scalar, LinearForm>> bad{{S(1), x}, {S(1), LinearForm({S(1), S(0), S(0)})}};
    CHECK_THROWS_AS(combine(bad, 2), Error);
    CHECK_THROWS_AS(combine(std::span<const std::pair<Scalar, LinearForm>>{}, 2), Error);
}

TEST_CASE("conjugate_form")
{
    HomogeneousForm f = binary({S(1), S(0), S(0), S(0, 1)});
    CHECK(conjugate_form(f) == binary({S(1), S(0), S(0), S(0, -1)}));
    HomogeneousForm r = binary({S(2), S(0), S(-6), S(0)});
    CHECK(conjugate_form(r) == r);
    Gen g(5);
    for (int k = 0; k < 10; ++k) {
        auto h = g.form(3, 3, false);
        CHECK(conjugate_form(conjugate_form(h)) == h);
    }
}

TEST_CASE("property: powers evaluate to powers of values")
{
    Gen g(2024);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned n = static_cast<unsigned>(g.integer(2, 4));
        unsigned d = static_cast<unsigned>(g.integer(1, 6));
        LinearForm L(g.vector(n, trial % 2 == 0));
        HomogeneousForm P = power_of_linear(L, d);
        CHECK(P.degree() == d);
        CHECK(P.num_vars() == n);
        auto q = g.vector(n, trial % 3 == 0);
        CHECK(P.evaluate(q) == power_value(L, q, d));
    }
}

TEST_CASE("property: combine is linear in its coefficients")
{
    Gen g(77);
    for (int trial = 0; trial < 20; ++trial) {
        unsigned d = static_cast<unsigned>(g.integer(1, 5));
        std::vector<std::pair<Scalar, LinearForm>> terms, scaled;
        Scalar c = Scalar(g.nonzero_rational());
        for (int k = 0; k < 3; ++k) {
            Scalar a = g.scalar(false);
            LinearForm L(g.vector(3, false));
            terms.emplace_back(a, L);
            scaled.emplace_back(c * a, L);
        }
        CHECK(combine(scaled, d) == c * combine(terms, d));
    }
}

TEST_CASE("property: realness of built forms")
{
    Gen g(9);
    for (int trial = 0; trial < 20; ++trial) {
        unsigned d = static_cast<unsigned>(g.integer(1, 5));
        std::vector<std::pair<Scalar, LinearForm>> real_terms, conj_terms;
        for (int k = 0; k < 2; ++k) {
            real_terms.emplace_back(Scalar(g.rational()), LinearForm(g.vector(3, true)));
            Scalar a = g.scalar(false);
            LinearForm L(g.vector(3, false));
            conj_terms.emplace_back(a, L);
            conj_terms.emplace_back(a.conj(), L.conj());
        }
        CHECK(combine(real_terms, d).is_real());
        CHECK(combine(conj_terms, d).is_real());
    }
}

TEST_CASE("dual coordinates round trip and pure powers map to monomial values")
{
    Gen g(3);
    LinearForm L(g.vector(3, false));
    auto v = power_of_linear(L, 4).dual_coordinates();
    auto mons = monomials(3, 4);
    for (std::size_t i = 0; i < mons.size(); ++i) CHECK(v[i] == monomial_value(mons[i], L.coeffs()));
    auto f = g.form(3, 4, false);
    CHECK(HomogeneousForm::from_dual_coordinates(3, 4, f.dual_coordinates()) == f);
}

TEST_CASE("forms reject exponents that do not match the degree")
{
    HomogeneousForm::Terms t;
    t.emplace(Exponent{1, 1}, S(1));
    CHECK_THROWS_AS(HomogeneousForm(2, 3, t), Error);
    HomogeneousForm a(2, 2), b(3, 2);
    CHECK_THROWS_AS(a += b, Error);
}
