#include "waringlab/io.hpp"

namespace waringlab {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw Error(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
    return *it;
}

unsigned uint_field(const Json& j, const char* key)
{
    const auto& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw Error(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<unsigned>();
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error("rational must be a \"p/q\" string");
}

const char* field_name(FieldTag f) { return f == FieldTag::Rational ? "R" : "C"; }

Json checks_json(const std::vector<Check>& cs)
{
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

Json subspace_json(const Subspace& s)
{
    Json b = Json::array();
    for (const auto& v : s.basis()) b.push_back(to_json(v));
    return b;
}

Subspace subspace_from_json(const Json& j)
{
    if (!j.is_array()) throw Error("subspace basis must be an array");
    std::vector<Vector> vs;
    for (const auto& v : j) vs.push_back(vector_from_json(v));
    if (vs.empty()) throw Error("empty subspace basis");
    return Subspace::span_of(vs);
}

Json optional_vector(const std::optional<Vector>& v) { return v ? to_json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Scalar& s) { return Json{{"re", to_string(s.re())}, {"im", to_string(s.im())}}; }

Scalar scalar_from_json(const Json& j)
{
    if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j));
    Rational im = 0;
    if (j.is_object() && j.contains("im")) im = rational_from_json(j["im"]);
    return Scalar(rational_from_json(field(j, "re")), im);
}

Json to_json(const Vector& v)
{
    Json a = Json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

Vector vector_from_json(const Json& j)
{
    if (!j.is_array()) throw Error("expected an array of scalars");
    Vector v;
    for (const auto& s : j) v.push_back(scalar_from_json(s));
    return v;
}

Json to_json(const HomogeneousForm& f)
{
    Json terms = Json::array();
    for (const auto& [alpha, c] : f.terms())
        terms.push_back(Json{{"exp", alpha}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
    return Json{{"m", f.num_vars() - 1}, {"d", f.degree()}, {"terms", terms}};
}

HomogeneousForm form_from_json(const Json& j)
{
    const unsigned m = uint_field(j, "m"), d = uint_field(j, "d");
    HomogeneousForm::Terms terms;
    const auto& ts = field(j, "terms");
    if (!ts.is_array()) throw Error("'terms' must be an array");
    for (const auto& t : ts) {
        const auto& e = field(t, "exp");
        if (!e.is_array() || e.size() != m + 1) throw Error("exponent must have m+1 entries");
        Exponent alpha;
        unsigned sum = 0;
        for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<long long>() < 0) throw Error("exponents must be non-negative integers");
            alpha.push_back(x.get<unsigned>());
            sum += alpha.back();
        }
        if (sum != d) throw Error("exponent does not have total degree d");
        Scalar c = scalar_from_json(t);
        if (terms.count(alpha)) throw Error("repeated exponent");
        terms.emplace(alpha, c);
    }
    return HomogeneousForm(m + 1, d, std::move(terms));
}

Json to_json(const PointSet& s)
{
    Json pts = Json::array();
    for (const auto& p : s) pts.push_back(to_json(p.coords()));
    return Json{{"m", s.ambient_dim()}, {"points", pts}};
}

PointSet point_set_from_json(const Json& j)
{
    const unsigned m = uint_field(j, "m");
    const auto& pts = field(j, "points");
    if (!pts.is_array()) throw Error("'points' must be an array");
    std::vector<ProjectivePoint> out;
    for (const auto& p : pts) {
        auto v = vector_from_json(p);
        if (v.size() != m + 1) throw Error("point must have m+1 coordinates");
        out.emplace_back(v);
    }
    return PointSet(m, out);
}

Json to_json(const CurveSpec& c)
{
    Json j{{"kind", to_string(c.kind)}, {"m", c.m}};
    Json lines = Json::array();
    for (const auto& l : c.lines) lines.push_back(subspace_json(l));
    j["lines"] = lines;
    j["plane"] = c.plane ? subspace_json(*c.plane) : Json(nullptr);
    if (c.quadric) {
        Json q = Json::array();
        for (std::size_t r = 0; r < 3; ++r) q.push_back(to_json(c.quadric->row(r)));
        j["quadric"] = q;
    } else {
        j["quadric"] = nullptr;
    }
    return j;
}

CurveSpec curve_from_json(const Json& j)
{
    const std::string kind = field(j, "kind").get<std::string>();
    std::vector<Subspace> lines;
    if (j.contains("lines"))
        for (const auto& l : j["lines"]) lines.push_back(subspace_from_json(l));
    if (kind == "line") {
        if (lines.size() != 1) throw Error("a line needs one basis");
        return CurveSpec::line(lines[0]);
    }
    if (kind == "two_disjoint_lines") {
        if (lines.size() != 2) throw Error("two disjoint lines need two bases");
        return CurveSpec::two_disjoint_lines(lines[0], lines[1]);
    }
    if (kind == "reducible_conic" && lines.size() == 2) return CurveSpec::line_pair(lines[0], lines[1]);
    if (kind == "smooth_conic" || kind == "reducible_conic") {
        auto plane = subspace_from_json(field(j, "plane"));
        const auto& q = field(j, "quadric");
        if (!q.is_array() || q.size() != 3) throw Error("quadric must be 3x3");
        std::vector<Vector> rows;
        for (const auto& r : q) rows.push_back(vector_from_json(r));
        return CurveSpec::conic(plane, Matrix::from_rows(rows, 3));
    }
    throw Error("unknown curve kind '" + kind + "'");
}

Json to_json(const Ball& b) { return Json{{"center", to_json(b.center)}, {"radius", to_string(b.radius)}}; }

Json to_json(const BinaryDecomposition& dec)
{
    Json j{{"rank", dec.rank}, {"field", field_name(dec.field)}, {"mode", dec.exact ? "exact" : "implicit"}};
    if (dec.exact) {
        Json pts = Json::array();
        for (const auto& p : dec.exact_points()) pts.push_back(to_json(p.coords()));
        j["points"] = pts;
        j["coeffs"] = to_json(dec.exact_coeffs());
    } else {
        j["generator"] = to_json(dec.generator);
        Json boxes = Json::array();
        for (const auto& b : dec.roots) boxes.push_back(to_json(b));
        j["boxes"] = boxes;
        j["at_infinity"] = dec.at_infinity;
        Json cs = Json::array();
        for (const auto& b : dec.coeffs) cs.push_back(to_json(b));
        j["coeffs"] = cs;
        j["residual_radius"] = to_string(dec.residual_radius);
    }
    return j;
}

Json to_json(const RankResult& r)
{
    Json steps = Json::array();
    for (const auto& [k, s] : r.steps) steps.push_back(Json{{"r", k}, {"step", to_string(s)}});
    return Json{{"rank", r.rank}, {"certified", r.certified}, {"steps", steps}, {"decomposition", to_json(r.decomposition)}};
}

Json to_json(const SpanReport& r)
{
    return Json{{"set_size", r.set_size}, {"span_dim", r.span_dim}, {"h1", r.h1}, {"independent", r.independent}};
}

Json to_json(const Instance& inst)
{
    Json j;
    j["m"] = inst.m;
    j["d"] = inst.d;
    j["case"] = inst.case_label ? Json(std::string(1, inst.case_label)) : Json(nullptr);
    j["seed"] = inst.seed;
    j["P"] = to_json(inst.P);
    j["S_C"] = to_json(inst.S_C);
    j["S_R"] = to_json(inst.S_R);
    j["coeffs_C"] = to_json(inst.coeffs_C);
    j["coeffs_R"] = to_json(inst.coeffs_R);
    if (inst.d % 2 == 0) {
        Json signs = Json::array();
        for (const auto& c : inst.coeffs_R) signs.push_back(sgn(c.re()));
        j["signs_R"] = signs;
    }
    j["curve"] = inst.case_label ? to_json(inst.curve) : Json(nullptr);
    j["minimality"] = inst.minimality;
    Json certs = Json::array();
    for (const auto& c : inst.certificates)
        certs.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["certificates"] = certs;
    return j;
}

Instance instance_from_json(const Json& j)
{
    Instance inst;
    inst.m = uint_field(j, "m");
    inst.d = uint_field(j, "d");
    inst.P = form_from_json(field(j, "P"));
    inst.S_C = point_set_from_json(field(j, "S_C"));
    inst.S_R = point_set_from_json(field(j, "S_R"));
    if (j.contains("case") && j["case"].is_string()) {
        const auto c = j["case"].get<std::string>();
        if (c != "a" && c != "b" && c != "c") throw Error("case must be a, b or c");
        inst.case_label = c[0];
    }
    if (j.contains("seed") && j["seed"].is_number_integer()) inst.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("coeffs_C")) inst.coeffs_C = vector_from_json(j["coeffs_C"]);
    if (j.contains("coeffs_R")) inst.coeffs_R = vector_from_json(j["coeffs_R"]);
    if (j.contains("curve") && !j["curve"].is_null()) inst.curve = curve_from_json(j["curve"]);
    if (j.contains("minimality") && j["minimality"].is_string()) inst.minimality = j["minimality"].get<std::string>();
    if (j.contains("certificates"))
        for (const auto& c : j["certificates"])
            inst.certificates.push_back({field(c, "name").get<std::string>(), field(c, "passed").get<bool>(),
                                         c.value("detail", std::string())});
    return inst;
}

Json to_json(const CaseReport& r)
{
    Json j;
    j["seed"] = r.seed;
    j["overall"] = r.overall;
    j["headline"] = r.headline ? Json(std::string(1, r.headline)) : Json(nullptr);
    j["rank_hypotheses"] = r.rank_hypotheses;
    j["hypotheses"] = checks_json(r.hypotheses);
    j["h1_total"] = to_json(r.h1_total);

    Json det;
    det["line_threshold"] = r.detected.line_threshold;
    det["conic_threshold"] = r.detected.conic_threshold;
    auto rich = [](const std::vector<RichCurve>& cs) {
        Json a = Json::array();
        for (const auto& c : cs) a.push_back(Json{{"curve", to_json(c.curve)}, {"count", c.count}});
        return a;
    };
    det["lines"] = rich(r.detected.lines);
    det["conics"] = rich(r.detected.conics);
    Json pairs = Json::array();
    for (auto [a, b] : r.detected.disjoint_pairs) pairs.push_back(Json::array({a, b}));
    det["disjoint_pairs"] = pairs;
    j["detected"] = det;

    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json vj;
        vj["case"] = std::string(1, v.label);
        vj["curve"] = to_json(v.curve);
        vj["count"] = v.count;
        vj["passed"] = v.passed;
        vj["conditions"] = checks_json(v.conditions);
        Json pts = Json::array();
        for (const auto& p : v.points)
            pts.push_back(Json{{"name", p.name}, {"dim", p.at.dim}, {"real", p.real}, {"point", optional_vector(p.at.point)}});
        vj["points"] = pts;
        Json ev = Json::array();
        for (const auto& e : v.evince)
            ev.push_back(Json{{"statement", e.statement},
                              {"field", field_name(e.field)},
                              {"set_size", e.set_size},
                              {"rank", e.rank ? Json(*e.rank) : Json(nullptr)},
                              {"certified", e.certified},
                              {"member", e.member},
                              {"passed", e.passed}});
        vj["evince"] = ev;
        if (v.lemma)
            vj["lemma"] = Json{{"hypothesis_holds", v.lemma->hypothesis_holds},
                               {"equal", v.lemma->equal},
                               {"residual", to_json(v.lemma->residual)}};
        else
            vj["lemma"] = nullptr;
        vj["notes"] = v.notes;
        verdicts.push_back(vj);
    }
    j["verdicts"] = verdicts;
    j["notes"] = r.notes;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace waringlab
