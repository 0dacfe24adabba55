#include <doctest.h>

#include "test_support.hpp"
#include "waringlab/instance.hpp"

using namespace waringlab;
using waringlab::testing::S;

namespace {

ProjectivePoint pt(std::initializer_list<Scalar> c) { return ProjectivePoint(Vector(c)); }

BinaryForm binary(unsigned d, std::initializer_list<std::pair<unsigned, long>> terms)
{
    HomogeneousForm::Terms t;
    for (auto [ydeg, c] : terms) t.emplace(Exponent{d - ydeg, ydeg}, S(c));
    return BinaryForm::from_homogeneous(HomogeneousForm(2, d, t));
}

// sum c_i (s_i . x)^d through the forms module only.
HomogeneousForm rebuild(const PointSet& s, const Vector& c, unsigned d)
{
    std::vector<std::pair<Scalar, LinearForm>> terms;
    for (std::size_t i = 0; i < s.size(); ++i) terms.emplace_back(c[i], LinearForm(s[i].coords()));
    return combine(terms, d);
}

long rank_of(const std::vector<Vector>& rows)
{
    return rows.empty() ? 0 : static_cast<long>(span_rank(rows));
}

const CurveEmbedding z_zero_line{{Vector{S(1), S(0), S(0)}, Vector{S(0), S(1), S(0)}}};

}  // namespace

TEST_CASE("worked cubic on the line z = 0")
{
    auto gap = curve_part_from_form(binary(3, {{0, 2}, {2, -6}}),
                                    std::vector{pt({S(1), S(0)}), pt({S(1), S(1)}), pt({S(1), S(-1)})});
    CHECK(gap.complex_points.size() == 2);
    CHECK(gap.real_points.size() == 3);
    PointSet e(2, {pt({S(0), S(0), S(1)})});
    auto inst = make_case_a(2, 3, gap, e, z_zero_line);

    HomogeneousForm expected(3, 3, {{{3, 0, 0}, S(2)}, {{1, 2, 0}, S(-6)}, {{0, 0, 3}, S(1)}});
    CHECK(inst.P == expected);
    CHECK(inst.S_C.same_set(PointSet(2, {pt({S(1), S(0, 1), S(0)}), pt({S(1), S(0, -1), S(0)}), pt({S(0), S(0), S(1)})})));
    CHECK(inst.S_R.same_set(PointSet(2, {pt({S(1), S(0), S(0)}), pt({S(1), S(1), S(0)}), pt({S(1), S(-1), S(0)}),
                                          pt({S(0), S(0), S(1)})})));
    CHECK(inst.case_label == 'a');
    CHECK(inst.certificates_pass());
    CHECK(inst.minimality == "global");
    CHECK(rebuild(inst.S_C, inst.coeffs_C, 3) == inst.P);
    CHECK(rebuild(inst.S_R, inst.coeffs_R, 3) == inst.P);
}

TEST_CASE("empty E keeps everything on the line")
{
    auto gap = curve_part_from_form(binary(3, {{0, 2}, {2, -6}}));
    auto inst = make_case_a(2, 3, gap, PointSet(2), z_zero_line);
    CHECK(inst.S_C.size() == 2);
    CHECK(inst.S_R.size() == 3);
    CHECK(inst.certificates_pass());
    CHECK(inst.P.coeff({0, 0, 3}).is_zero());
}

TEST_CASE("constraint violations name the condition")
{
    // ranks 3 + 3 with two off-line points: 10 > 8
    CurvePart flat;
    flat.n = 3;
    flat.form = binary(3, {{0, 1}, {3, 1}});
    for (long k = 1; k <= 3; ++k) {
        flat.complex_points.push_back(pt({S(1), S(k)}));
        flat.real_points.push_back(pt({S(1), S(k)}));
    }
    PointSet e(2, {pt({S(0), S(0), S(1)}), pt({S(1), S(1), S(1)})});
    CHECK_THROWS_WITH_AS(make_case_a(2, 3, flat, e, z_zero_line), doctest::Contains("3d-1"), Error);

    // x^5 + y^5 + (x+y)^5 has equal ranks and only 3 points on its line
    auto equal = curve_part_from_form(binary(5, {{0, 2}, {1, 5}, {2, 10}, {3, 10}, {4, 5}, {5, 2}}));
    CHECK(equal.complex_points.size() == 3);
    CHECK(equal.real_points.size() == 3);
    CurveEmbedding l5{{Vector{S(1), S(0), S(0), S(0)}, Vector{S(0), S(1), S(0), S(0)}}};
    CurveEmbedding r5{{Vector{S(0), S(0), S(1), S(0)}, Vector{S(0), S(0), S(0), S(1)}}};
    std::mt19937_64 rng(7);
    auto quintic = make_gap_form(5, 3, rng);
    CHECK_THROWS_WITH_AS(make_case_c(3, 5, quintic, equal, PointSet(3), l5, r5), doctest::Contains("(c.ii)"), Error);
    CHECK_THROWS_WITH_AS(make_case_a(3, 5, equal, PointSet(3), l5), doctest::Contains("(a.iii)"), Error);

    CurveEmbedding conic{{Vector{S(1), S(0), S(0)}, Vector{S(0), S(1), S(0)}, Vector{S(0), S(0), S(1)}}};
    auto sextic = curve_part_from_form(binary(6, {{0, 1}, {6, 1}}));
    CHECK_THROWS_WITH_AS(make_case_b(2, 3, sextic, PointSet(2), conic), doctest::Contains("(b.iii)"), Error);

    CHECK_THROWS_WITH_AS(generate_instance('c', 5, 2, 0), doctest::Contains("m >= 3"), Error);
    CHECK_THROWS_WITH_AS(make_case_c(2, 5, quintic, quintic, PointSet(2), z_zero_line, z_zero_line),
                         doctest::Contains("m >= 3"), Error);
    CHECK_THROWS_AS(generate_instance('c', 4, 3, 0), Error);
}

TEST_CASE("gap forms have certified ranks and exact decompositions")
{
    std::mt19937_64 rng(11);
    for (unsigned n = 3; n <= 10; ++n) {
        for (unsigned r = 2; 2 * r <= n + 1; ++r) {
            auto g = make_gap_form(n, r, rng);
            CAPTURE(n);
            CAPTURE(r);
            CHECK(g.form.is_real());
            auto rc = complex_rank(g.form);
            auto rr = real_rank(g.form, g.real_points);
            CHECK(rc.rank == r);
            CHECK(rr.rank == n + 2 - r);
            CHECK(rr.certified);
            // reconstruction through homogeneous forms
            auto rebuild_binary = [&](const std::vector<ProjectivePoint>& pts, const Vector& c) {
                std::vector<std::pair<Scalar, LinearForm>> terms;
                for (std::size_t i = 0; i < pts.size(); ++i) terms.emplace_back(c[i], LinearForm(pts[i].coords()));
                return combine(terms, n);
            };
            CHECK(rebuild_binary(g.complex_points, g.complex_coeffs) == g.form.to_homogeneous());
            CHECK(rebuild_binary(g.real_points, g.real_coeffs) == g.form.to_homogeneous());
            for (const auto& p : g.real_points) CHECK(!p.coords()[1].is_zero());
        }
    }
}

TEST_CASE("generated instances re-verify from scratch")
{
    struct Job {
        char c;
        unsigned d, m;
    };
    std::vector<Job> jobs;
    for (unsigned d = 3; d <= 6; ++d)
        for (unsigned m = 2; m <= 4; ++m) {
            jobs.push_back({'a', d, m});
            jobs.push_back({'b', d, m});
            if (m >= 3 && d >= 5) jobs.push_back({'c', d, m});
        }
    for (const auto& j : jobs) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto inst = generate_instance(j.c, j.d, j.m, seed);
            CAPTURE(j.c);
            CAPTURE(j.d);
            CAPTURE(j.m);
            CAPTURE(seed);
            CHECK(inst.certificates_pass());
            CHECK(inst.P.is_real());
            CHECK(inst.S_R.is_real());
            CHECK(rebuild(inst.S_C, inst.coeffs_C, j.d) == inst.P);
            CHECK(rebuild(inst.S_R, inst.coeffs_R, j.d) == inst.P);
            CHECK(inst.S_C.size() < inst.S_R.size());
            CHECK(inst.S_C.size() + inst.S_R.size() <= 3 * j.d - 1);

            // h^1 of the union from a direct evaluation matrix
            auto all = inst.S_C.united(inst.S_R);
            std::vector<Vector> rows;
            for (const auto& p : all) {
                Vector row;
                for (const auto& a : monomials(j.m + 1, j.d)) row.push_back(monomial_value(a, p.coords()));
                rows.push_back(row);
            }
            CHECK(static_cast<long>(all.size()) - rank_of(rows) > 0);

            std::size_t off_c = 0, off_r = 0;
            for (const auto& p : inst.S_C)
                if (!inst.curve.contains(p)) {
                    ++off_c;
                    CHECK(inst.S_R.contains(p));
                }
            for (const auto& p : inst.S_R)
                if (!inst.curve.contains(p)) ++off_r;
            CHECK(off_c == off_r);

            if (j.c == 'c') {
                CHECK(inst.curve.kind == CurveKind::TwoDisjointLines);
                CHECK(lines_disjoint(inst.curve.lines[0], inst.curve.lines[1]));
            }
            if (inst.curve.kind == CurveKind::ReducibleConic) {
                auto node = *inst.curve.node();
                CHECK(!all.contains(node));
                for (const auto& l : inst.curve.lines) {
                    std::size_t on = 0;
                    for (const auto& p : all) on += l.contains(p) ? 1 : 0;
                    CHECK(on >= j.d + 1);
                }
            }
        }
    }
}

TEST_CASE("seeded generation is reproducible")
{
    for (char c : {'a', 'b', 'c'}) {
        auto x = generate_instance(c, 5, 3, 42);
        auto y = generate_instance(c, 5, 3, 42);
        CHECK(x.P == y.P);
        CHECK(x.S_C.points() == y.S_C.points());
        CHECK(x.S_R.points() == y.S_R.points());
        CHECK(x.curve == y.curve);
        auto z = generate_instance(c, 5, 3, 44);
        CHECK_FALSE(x.P == z.P);
    }
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}
