#include <doctest.h>

#include "test_support.hpp"
#include "waringlab/matrix.hpp"
#include "waringlab/roots.hpp"
#include "waringlab/upoly.hpp"

using namespace waringlab;
using waringlab::testing::Gen;
using waringlab::testing::S;

namespace {

Matrix random_matrix(Gen& g, std::size_t rows, std::size_t cols, bool real)
{
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = g.scalar(real);
    return m;
}

Matrix product(const Matrix& a, const Matrix& b)
{
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

// Leibniz expansion; independent of the elimination code.
Scalar leibniz(const Matrix& m)
{
    std::vector<std::size_t> perm(m.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Scalar total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar t(1);
        for (std::size_t i = 0; i < perm.size(); ++i) t *= m(i, perm[i]);
        total += inversions % 2 ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

QPoly from_roots(const std::vector<Rational>& roots)
{
    QPoly p = QPoly::constant(Rational(1));
    for (const auto& r : roots) p = p * QPoly::linear_root(r);
    return p;
}

}  // namespace

TEST_CASE("Bareiss rank agrees with the echelon rank and with the construction")
{
    Gen g(11);
    for (int trial = 0; trial < 60; ++trial) {
        bool real = trial % 2 == 0;
        std::size_t rows = static_cast<std::size_t>(g.integer(1, 7));
        std::size_t cols = static_cast<std::size_t>(g.integer(1, 7));
        std::size_t r = static_cast<std::size_t>(g.integer(1, static_cast<long>(std::min(rows, cols))));
        Matrix m = product(random_matrix(g, rows, r, real), random_matrix(g, r, cols, real));
        auto e = m.rref();
        CHECK(m.rank() == e.pivots.size());
        CHECK(m.rank() <= r);
        CHECK(m.transpose().rank() == m.rank());
    }
    CHECK(Matrix(3, 4).rank() == 0);
}

TEST_CASE("kernel vectors are annihilated and count matches nullity")
{
    Gen g(12);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = product(random_matrix(g, 4, 2, trial % 2), random_matrix(g, 2, 6, trial % 2));
        auto ker = m.kernel();
        CHECK(ker.size() == m.cols() - m.rank());
        for (const auto& v : ker)
            for (const auto& x : m * v) CHECK(x.is_zero());
        CHECK(span_rank(ker) == ker.size());
    }
}

TEST_CASE("solve, inverse and determinant")
{
    Gen g(13);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = random_matrix(g, 4, 4, trial % 3 == 0);
        CHECK(a.determinant() == leibniz(a));
        auto inv = a.inverse();
        REQUIRE(inv.has_value() == !a.determinant().is_zero());
        if (inv) {
            auto id = product(*inv, a);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) CHECK(id(i, j) == Scalar(i == j ? 1 : 0));
            auto b = g.vector(4, false);
            auto x = a.solve(b);
            REQUIRE(x);
            CHECK(a * *x == b);
        }
    }
    Matrix sing = Matrix::from_rows(std::vector<Vector>{{S(1), S(2)}, {S(2), S(4)}}, 2);
    CHECK_FALSE(sing.inverse());
    CHECK_FALSE(sing.solve(Vector{S(1), S(0)}));
    CHECK(sing.solve(Vector{S(1), S(2)}));
    CHECK(proportional(Vector{S(1), S(0, 1)}, Vector{S(0, 1), S(-1)}));
    CHECK_FALSE(proportional(Vector{S(1), S(1)}, Vector{S(1), S(2)}));
}

TEST_CASE("polynomial division and gcd")
{
    Gen g(14);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> ca, cb;
        for (int k = 0; k < 6; ++k) ca.push_back(g.rational());
        for (int k = 0; k < 3; ++k) cb.push_back(g.rational());
        cb.push_back(Rational(1));
        QPoly a(ca), b(cb);
        auto [q, r] = QPoly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        QPoly common = from_roots({g.rational(), g.rational()});
        auto d = QPoly::gcd(a * common, b * common);
        CHECK(QPoly::divmod(d, common).second.is_zero());
        CHECK(QPoly::divmod(a * common, d).second.is_zero());
    }
    CHECK(from_roots({1, 2, 3}).is_squarefree());
    CHECK_FALSE(from_roots({1, 2, 2}).is_squarefree());
}

TEST_CASE("Sturm counts and real root isolation")
{
    QPoly x2p1(std::vector<Rational>{1, 0, 1});
    Gen g(15);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> roots;
        while (roots.size() < 4) {
            Rational r = g.rational(6, 5);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        QPoly p = from_roots(roots) * x2p1;
        SturmSequence st(p);
        CHECK(st.count_real_roots() == 4);
        std::sort(roots.begin(), roots.end());
        auto iv = isolate_real_roots(p);
        REQUIRE(iv.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            bool inside = iv[i].exact() ? iv[i].lo == roots[i] : (iv[i].lo < roots[i] && roots[i] <= iv[i].hi);
            CHECK(inside);
        }
        CHECK(st.count_in(roots[0] - 1, roots[3]) == 4);
        CHECK(st.count_in(roots[0], roots[3]) == 3);
    }
    // irrational roots of x^2 - 2
    QPoly p(std::vector<Rational>{-2, 0, 1});
    auto iv = isolate_real_roots(p);
    REQUIRE(iv.size() == 2);
    auto fine = refine_real_root(p, iv[1], Rational(1, 1000000));
    CHECK(fine.hi - fine.lo <= Rational(1, 1000000));
    CHECK(fine.lo * fine.lo < 2);
    CHECK(fine.hi * fine.hi >= 2);
    CHECK(SturmSequence(x2p1).count_real_roots() == 0);
}

TEST_CASE("simplest rational in an interval")
{
    CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-7, 5), Rational(-6, 5)) == Rational(-4, 3));
    CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == Rational(0));
    CHECK(simplest_between(Rational(5, 7), Rational(5, 7)) == Rational(5, 7));
    Gen g(16);
    for (int trial = 0; trial < 50; ++trial) {
        Rational a = g.rational(9, 50), b = a + Rational(g.integer(1, 10), 97);
        Rational s = simplest_between(a, b);
        CHECK(a <= s);
        CHECK(s <= b);
        for (long den = 1; den < s.get_den().get_si(); ++den) {
            // no fraction with smaller denominator fits
            mpz_class lo = a.get_num() * den, hi = b.get_num() * den;
            mpz_class c;
            mpz_cdiv_q(c.get_mpz_t(), lo.get_mpz_t(), a.get_den().get_mpz_t());
            CHECK(Rational(c, den) > b);
        }
    }
}

TEST_CASE("complex root enclosures")
{
    // (t - (1+2i)) (t - 1/3) (t^2 - 2): one exact Gaussian root, one rational, two irrational
    CPoly p = CPoly::linear_root(S(1, 2)) * CPoly::linear_root(Scalar(Rational(1, 3))) *
              to_complex(QPoly(std::vector<Rational>{-2, 0, 1}));
    auto balls = isolate_complex_roots(p, Rational(1, 1000000));
    REQUIRE(balls.size() == 4);
    int exact = 0;
    for (const auto& b : balls) {
        if (b.exact()) {
            ++exact;
            CHECK(p(b.center).is_zero());
        } else {
            CHECK(b.radius <= Rational(1, 1000000));
            // center approximates +-sqrt 2
            Rational c2 = b.center.re() * b.center.re();
            CHECK(abs(c2 - 2) < Rational(1, 100000));
        }
    }
    CHECK(exact == 2);
    for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j) CHECK(balls[i].center != balls[j].center);
}

TEST_CASE("ball arithmetic and linear enclosures")
{
    Ball a{S(1), Rational(1, 10)}, b{S(2, 1), Rational(1, 100)};
    auto c = a * b;
    CHECK(c.center == S(2, 1));
    CHECK(c.radius >= Rational(1, 100) + Rational(2236, 10000) / 10 + Rational(1, 1000));
    CHECK((a - a).contains_zero());
    CHECK_FALSE(Ball{S(1), Rational(1, 2)}.contains_zero());

    std::vector<std::vector<Ball>> m{{Ball{S(2), Rational(1, 1000000)}, Ball{S(1), 0}},
                                     {Ball{S(1), 0}, Ball{S(3), Rational(1, 1000000)}}};
    auto x = enclose_linear_solution(m, Vector{S(3), S(4)});
    REQUIRE(x);
    // exact solution (1, 1)
    CHECK(((*x)[0] - Ball{S(1), 0}).contains_zero());
    CHECK(((*x)[1] - Ball{S(1), 0}).contains_zero());
    CHECK((*x)[0].radius < Rational(1, 10000));
}
