#include <doctest.h>

#include "test_support.hpp"
#include "waringlab/io.hpp"

using namespace waringlab;
using waringlab::testing::Gen;
using waringlab::testing::S;

TEST_CASE("scalars and forms round trip with p/q strings")
{
    auto j = to_json(Scalar(Rational(-3, 4), Rational(5)));
    CHECK(j.dump() == R"({"re":"-3/4","im":"5/1"})");
    CHECK(scalar_from_json(j) == Scalar(Rational(-3, 4), Rational(5)));
    CHECK(scalar_from_json(Json::parse(R"({"re":"7"})")) == S(7));

    Gen g(3);
    for (int i = 0; i < 20; ++i) {
        auto f = g.form(3, 4, i % 2 == 0);
        CHECK(form_from_json(to_json(f)) == f);
        CHECK(dump(to_json(form_from_json(Json::parse(dump(to_json(f)))))) == dump(to_json(f)));
    }
    HomogeneousForm cubic(2, 3, {{{3, 0}, S(2)}, {{1, 2}, S(-6)}});
    CHECK(to_json(cubic).dump() ==
          R"({"m":1,"d":3,"terms":[{"exp":[3,0],"re":"2/1","im":"0/1"},{"exp":[1,2],"re":"-6/1","im":"0/1"}]})");
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(form_from_json(Json::parse(R"({"m":1,"d":3,"terms":[{"exp":[2,0],"re":"1"}]})")), Error);
    CHECK_THROWS_AS(form_from_json(Json::parse(R"({"m":1,"terms":[]})")), Error);
    CHECK_THROWS_AS(form_from_json(Json::parse(R"({"m":1,"d":2,"terms":[{"exp":[2,0],"re":"1/0"}]})")), Error);
    CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"m":2,"points":[[{"re":"1"},{"re":"0"}]]})")), Error);
    CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"m":1,"points":[[{"re":"1"},{"re":"0"}],[{"re":"2"},{"re":"0"}]]})")),
                    Error);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind":"spiral"})")), Error);
}

TEST_CASE("instances and reports serialize deterministically")
{
    for (char c : {'a', 'b', 'c'}) {
        auto inst = generate_instance(c, 6, 3, 17);
        auto text = dump(to_json(inst));
        auto back = instance_from_json(Json::parse(text));
        CHECK(back.P == inst.P);
        CHECK(back.S_C.points() == inst.S_C.points());
        CHECK(back.S_R.points() == inst.S_R.points());
        CHECK(back.curve == inst.curve);
        CHECK(back.case_label == c);
        CHECK(back.seed == 17);
        CHECK(dump(to_json(back)) == text);
        auto j = Json::parse(text);
        CHECK(j.contains("signs_R"));
        for (const auto& s : j["signs_R"]) CHECK((s == 1 || s == -1));

        auto r1 = dump(to_json(classify(inst)));
        auto r2 = dump(to_json(classify(back)));
        CHECK(r1 == r2);
        CHECK(Json::parse(r1)["overall"] == true);
        CHECK(r1.find("\"headline\"") < r1.find("\"verdicts\""));
    }
}

TEST_CASE("binary decompositions in both modes")
{
    auto f = BinaryForm::from_homogeneous(HomogeneousForm(2, 3, {{{3, 0}, S(2)}, {{1, 2}, S(-6)}}));
    auto j = to_json(complex_rank(f));
    CHECK(j["rank"] == 2);
    CHECK(j["decomposition"]["field"] == "C");
    CHECK(j["decomposition"]["mode"] == "exact");
    CHECK(j["decomposition"]["points"].size() == 2);

    // x^3 + x y^2 + y^3 has irrational roots, so its decomposition is implicit
    auto g = BinaryForm::from_homogeneous(HomogeneousForm(2, 3, {{{3, 0}, S(1)}, {{1, 2}, S(3)}, {{0, 3}, S(1)}}));
    auto cr = complex_rank(g);
    auto k = to_json(cr.decomposition);
    if (!cr.decomposition.exact) {
        CHECK(k["mode"] == "implicit");
        CHECK(k.contains("generator"));
        CHECK(k["boxes"].size() + (k["at_infinity"] == true ? 1 : 0) == cr.rank);
    }
    auto span = to_json(SpanReport{5, 3, 1, false});
    CHECK(span.dump() == R"({"set_size":5,"span_dim":3,"h1":1,"independent":false})");
}
