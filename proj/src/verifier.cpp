#include "waringlab/verifier.hpp"

#include <algorithm>
#include <array>

namespace waringlab {

namespace {

bool all_real(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_real(); });
}

bool all_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string sizes(std::size_t a, const char* rel, std::size_t b)
{
    return std::to_string(a) + " " + rel + " " + std::to_string(b);
}

HomogeneousForm form_of(const Instance& inst, const Vector& dual)
{
    return HomogeneousForm::from_dual_coordinates(inst.m + 1, inst.d, dual);
}

bool safe_membership(const Instance& inst, const Vector& point, const PointSet& set, FieldTag field)
{
    try {
        return membership(form_of(inst, point), set, field);
    } catch (const Error&) {
        return false;
    }
}

Evince evince_on_chart(const Instance& inst, std::string statement, const Vector& point, const PointSet& set,
                       const CurveChart& chart, FieldTag field)
{
    Evince ev;
    ev.statement = std::move(statement);
    ev.field = field;
    ev.set_size = set.size();
    if (all_zero(point)) {
        // an empty branch carries the zero form
        ev.rank = 0;
        ev.certified = true;
        ev.member = true;
        ev.passed = set.empty();
        return ev;
    }
    if (auto c = curve_coordinates(point, chart, inst.d)) {
        BinaryForm f(*c);
        if (field == FieldTag::GaussianRational) {
            ev.rank = complex_rank(f).rank;
            ev.certified = true;
        } else if (f.is_real()) {
            std::vector<ProjectivePoint> hints;
            for (const auto& p : set)
                if (auto st = chart.preimage(p); st && st->is_real()) hints.push_back(*st);
            auto rr = real_rank(f, hints);
            ev.rank = rr.rank;
            ev.certified = rr.certified;
        }
    }
    ev.member = safe_membership(inst, point, set, field);
    ev.passed = ev.rank && ev.certified && *ev.rank == set.size() && ev.member;
    return ev;
}

std::string evince_detail(const Evince& ev)
{
    std::string s = "#set = " + std::to_string(ev.set_size) + ", rank = ";
    s += ev.rank ? std::to_string(*ev.rank) : std::string("n/a");
    if (ev.rank && !ev.certified) s += " (uncertified)";
    s += ev.member ? ", in span" : ", not in span";
    return s;
}

void add_evince(CaseVerdict& v, const std::string& name, const Evince& ev)
{
    v.evince.push_back(ev);
    v.conditions.push_back({name, ev.passed, evince_detail(ev)});
}

NamedPoint named(std::string name, Intersection at)
{
    NamedPoint p{std::move(name), std::move(at), false};
    p.real = p.at.unique() && all_real(*p.at.point);
    return p;
}

std::string intersection_detail(const Intersection& at)
{
    if (at.unique()) return "single point";
    if (at.dim < 0) return "empty";
    return "projective dimension " + std::to_string(at.dim);
}

NamedPoint intersect_named(CaseVerdict& v, const std::string& name, const Vector& p, const PointSet& e, const PointSet& t,
                           unsigned d)
{
    try {
        return named(name, unique_intersection_point(p, e, t, d));
    } catch (const Error& err) {
        v.notes.push_back(name + ": " + err.what());
        return named(name, Intersection{});
    }
}

void check_off_curve(CaseVerdict& v, const std::string& name, const Split& c, const Split& r)
{
    const bool same = c.off.same_set(r.off);
    v.conditions.push_back({name, same,
                            same ? std::to_string(c.off.size()) + " common points off the curve"
                                 : "off-curve parts differ: " + sizes(c.off.size(), "vs", r.off.size())});
}

void attach_lemma(CaseVerdict& v, const Instance& inst)
{
    if (inst.d > static_cast<unsigned>(v.curve.degree())) v.lemma = lemma_c2_check(inst.S_C, inst.S_R, v.curve, inst.d);
}

void finish(CaseVerdict& v)
{
    v.passed = !v.conditions.empty() &&
               std::all_of(v.conditions.begin(), v.conditions.end(), [](const Check& c) { return c.passed; });
}

std::size_t count_on(const PointSet& u, const CurveSpec& c)
{
    return static_cast<std::size_t>(std::count_if(u.begin(), u.end(), [&](const ProjectivePoint& p) { return c.contains(p); }));
}

// Membership coefficients of `point` on `set`, summed per branch of a line pair;
// the node (if present) is assigned to the first branch.
std::optional<std::array<Vector, 2>> split_by_branch(const Instance& inst, const Vector& point, const PointSet& set,
                                                     const CurveSpec& conic, std::array<PointSet, 2>& parts)
{
    parts = {PointSet(inst.m), PointSet(inst.m)};
    auto coeffs = membership_coefficients(form_of(inst, point), set);
    if (!coeffs) return std::nullopt;
    std::array<Vector, 2> pieces{Vector(point.size()), Vector(point.size())};
    for (std::size_t i = 0; i < set.size(); ++i) {
        const std::size_t b = conic.lines[0].contains(set[i]) ? 0 : 1;
        parts[b].insert(set[i]);
        auto nu = veronese_point(set[i], inst.d);
        for (std::size_t a = 0; a < nu.size(); ++a) pieces[b][a] += (*coeffs)[i] * nu[a];
    }
    return pieces;
}

}  // namespace

const Check* CaseVerdict::condition(const std::string& name) const
{
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<Check> check_hypotheses(const Instance& inst)
{
    std::vector<Check> out;
    const unsigned m = inst.m, d = inst.d;
    std::string problem;
    if (inst.S_C.empty() || inst.S_R.empty()) problem = "empty point set";
    else if (inst.S_C.ambient_dim() != m || inst.S_R.ambient_dim() != m) problem = "point sets not in P^m";
    else if (inst.P.num_vars() != m + 1 || inst.P.degree() != d) problem = "P is not a degree-d form in m+1 variables";
    else if (d < 1) problem = "degree must be positive";
    out.push_back({"input", problem.empty(), problem.empty() ? "well-formed" : problem});
    if (!problem.empty()) return out;

    const auto total = inst.S_C.size() + inst.S_R.size();
    out.push_back({"P real", inst.P.is_real(), ""});
    out.push_back({"budget 3d-1", total <= 3 * d - 1, sizes(total, "<=", 3 * d - 1)});
    out.push_back({"rank inequality", inst.S_C.size() < inst.S_R.size(), sizes(inst.S_C.size(), "<", inst.S_R.size())});
    out.push_back({"membership C", membership(inst.P, inst.S_C, FieldTag::GaussianRational), "P in <nu_d(S_C)>"});
    bool mem_r = false;
    std::string mem_r_detail = "P in <nu_d(S_R)> over R";
    try {
        mem_r = membership(inst.P, inst.S_R, FieldTag::Rational);
    } catch (const Error& err) {
        mem_r_detail = err.what();
    }
    out.push_back({"membership R", mem_r, mem_r_detail});
    auto h1 = h1_ideal(inst.S_C.united(inst.S_R), d);
    out.push_back({"h1 positive", h1.h1 > 0, "h1 = " + std::to_string(h1.h1)});
    return out;
}

DetectedCurves detect_structure(const Instance& inst, const VerifyOptions& opts)
{
    DetectedCurves out;
    out.line_threshold = opts.line_threshold.value_or(inst.d + 2);
    out.conic_threshold = opts.conic_threshold.value_or(2 * inst.d + 2);
    auto u = inst.S_C.united(inst.S_R);
    out.lines = find_rich_lines(u, out.line_threshold);
    out.conics = find_rich_conics(u, out.conic_threshold);
    for (std::size_t i = 0; i < out.lines.size(); ++i)
        for (std::size_t j = i + 1; j < out.lines.size(); ++j)
            if (lines_disjoint(out.lines[i].curve.lines[0], out.lines[j].curve.lines[0]))
                out.disjoint_pairs.emplace_back(i, j);
    return out;
}

CaseVerdict verify_case_a(const Instance& inst, const CurveSpec& line)
{
    CaseVerdict v;
    v.label = 'a';
    v.curve = line;
    const unsigned d = inst.d;
    auto u = inst.S_C.united(inst.S_R);
    v.count = count_on(u, line);
    v.conditions.push_back({"(a) line over R", line.is_real(), ""});

    auto sc = split_on_curve(inst.S_C, line), sr = split_on_curve(inst.S_R, line);
    check_off_curve(v, "(a.i)", sc, sr);

    const auto pd = inst.P.dual_coordinates();
    auto pl = intersect_named(v, "P_l", pd, sc.off, sc.on, d);
    auto pl_r = intersect_named(v, "P_l (real span)", pd, sr.off, sr.on, d);
    const bool same = pl.at.unique() && pl_r.at.unique() && *pl.at.point == *pl_r.at.point;
    v.conditions.push_back({"(a.ii) P_l", same && pl.real,
                            intersection_detail(pl.at) + (same ? ", real and complex spans agree" : ", spans disagree") +
                                (pl.real ? ", real" : "")});
    if (pl.at.unique()) {
        auto chart = CurveChart::line(line.lines[0]);
        add_evince(v, "(a.ii) complex evinces",
                   evince_on_chart(inst, "S_C,l evinces r_C(P_l)", *pl.at.point, sc.on, chart, FieldTag::GaussianRational));
        if (pl_r.at.unique())
            add_evince(v, "(a.ii) real evinces",
                       evince_on_chart(inst, "S_R,l evinces r_R(P_l)", *pl_r.at.point, sr.on, chart, FieldTag::Rational));
    }
    v.points.push_back(pl);
    v.points.push_back(pl_r);

    v.conditions.push_back({"(a.iii) union", v.count >= d + 2, sizes(v.count, ">=", d + 2)});
    v.conditions.push_back({"(a.iii) strict", sc.on.size() < sr.on.size(), sizes(sc.on.size(), "<", sr.on.size())});
    attach_lemma(v, inst);
    finish(v);
    return v;
}

CaseVerdict verify_case_b(const Instance& inst, const CurveSpec& conic)
{
    CaseVerdict v;
    v.label = 'b';
    v.curve = conic;
    const unsigned d = inst.d;
    auto u = inst.S_C.united(inst.S_R);
    v.count = count_on(u, conic);
    v.conditions.push_back({"(b) conic over R", conic.is_real(), to_string(conic.kind)});

    auto sc = split_on_curve(inst.S_C, conic), sr = split_on_curve(inst.S_R, conic);
    check_off_curve(v, "(b.i)", sc, sr);

    const auto pd = inst.P.dual_coordinates();
    auto pc = intersect_named(v, "P_C", pd, sc.off, sc.on, d);
    auto pc_r = intersect_named(v, "P_C (real span)", pd, sr.off, sr.on, d);
    const bool same = pc.at.unique() && pc_r.at.unique() && *pc.at.point == *pc_r.at.point;
    v.conditions.push_back({"(b.ii) P_C", same && pc.real,
                            intersection_detail(pc.at) + (same ? ", real and complex spans agree" : ", spans disagree") +
                                (pc.real ? ", real" : "")});

    if (pc.at.unique() && pc_r.at.unique()) {
        if (conic.kind == CurveKind::SmoothConic) {
            std::optional<ProjectivePoint> base;
            for (const auto& p : u)
                if (p.is_real() && conic.contains(p)) {
                    base = p;
                    break;
                }
            if (!base) {
                v.conditions.push_back({"(b.ii) complex evinces", false, "no real point of S on the conic for a chart"});
                v.conditions.push_back({"(b.ii) real evinces", false, "no real point of S on the conic for a chart"});
            } else {
                auto chart = CurveChart::conic(conic, *base);
                add_evince(v, "(b.ii) complex evinces",
                           evince_on_chart(inst, "S_C,C evinces r_C(P_C)", *pc.at.point, sc.on, chart, FieldTag::GaussianRational));
                add_evince(v, "(b.ii) real evinces",
                           evince_on_chart(inst, "S_R,C evinces r_R(P_C)", *pc_r.at.point, sr.on, chart, FieldTag::Rational));
            }
        } else {
            v.notes.push_back("reducible conic: evincing is checked branch by branch, a necessary condition");
            for (int f = 0; f < 2; ++f) {
                const FieldTag field = f == 0 ? FieldTag::GaussianRational : FieldTag::Rational;
                const auto& set = f == 0 ? sc.on : sr.on;
                const auto& point = f == 0 ? *pc.at.point : *pc_r.at.point;
                const std::string tag = f == 0 ? "C" : "R";
                const std::string name = f == 0 ? "(b.ii) complex evinces" : "(b.ii) real evinces";
                std::array<PointSet, 2> parts{PointSet(inst.m), PointSet(inst.m)};
                auto pieces = split_by_branch(inst, point, set, conic, parts);
                if (!pieces) {
                    v.conditions.push_back({name, false, "P_C outside the span of the on-conic set"});
                    continue;
                }
                bool ok = true;
                std::string detail;
                for (int b = 0; b < 2; ++b) {
                    auto chart = CurveChart::line(conic.lines[b]);
                    auto ev = evince_on_chart(inst, "S_" + tag + ",C on branch " + std::to_string(b + 1) + " evinces r_" + tag +
                                                        " of its part of P_C",
                                              (*pieces)[b], parts[b], chart, field);
                    ok = ok && ev.passed;
                    detail += (b ? "; " : "") + std::string("branch ") + std::to_string(b + 1) + ": " + evince_detail(ev);
                    v.evince.push_back(ev);
                }
                v.conditions.push_back({name, ok, detail});
            }
        }
    }
    v.points.push_back(pc);
    v.points.push_back(pc_r);

    v.conditions.push_back({"(b.iii) union", v.count >= 2 * d + 2, sizes(v.count, ">=", 2 * d + 2)});
    v.conditions.push_back({"(b.iii) strict", sc.on.size() < sr.on.size(), sizes(sc.on.size(), "<", sr.on.size())});
    if (conic.kind == CurveKind::ReducibleConic) {
        const auto node = *conic.node();
        bool ok = true;
        std::string detail;
        for (int b = 0; b < 2; ++b) {
            std::size_t off_node = 0;
            for (const auto& p : u)
                if (conic.lines[b].contains(p) && !(p == node)) ++off_node;
            ok = ok && off_node >= d + 1;
            detail += (b ? "; " : "") + std::string("branch ") + std::to_string(b + 1) + ": " + sizes(off_node, ">=", d + 1);
        }
        v.conditions.push_back({"(b.iv)", ok, detail});
    } else {
        v.conditions.push_back({"(b.iv)", true, "smooth conic, not applicable"});
    }
    attach_lemma(v, inst);
    finish(v);
    return v;
}

CaseVerdict verify_case_c(const Instance& inst, const CurveSpec& lines)
{
    CaseVerdict v;
    v.label = 'c';
    v.curve = lines;
    const unsigned d = inst.d;
    auto u = inst.S_C.united(inst.S_R);
    v.count = count_on(u, lines);
    v.conditions.push_back({"(c) m >= 3", inst.m >= 3, "m = " + std::to_string(inst.m)});
    v.conditions.push_back({"(c) lines over R and disjoint",
                            lines.is_real() && lines.kind == CurveKind::TwoDisjointLines &&
                                lines_disjoint(lines.lines[0], lines.lines[1]),
                            ""});

    auto sc = split_on_curve(inst.S_C, lines), sr = split_on_curve(inst.S_R, lines);
    check_off_curve(v, "(c.i)", sc, sr);

    const CurveSpec l = CurveSpec::line(lines.lines[0]), r = CurveSpec::line(lines.lines[1]);
    const auto nl = count_on(u, l), nr = count_on(u, r);
    v.conditions.push_back({"(c.ii)", nl >= d + 2 && nr >= d + 2,
                            "l: " + sizes(nl, ">=", d + 2) + "; r: " + sizes(nr, ">=", d + 2)});

    auto chart_l = CurveChart::line(lines.lines[0]), chart_r = CurveChart::line(lines.lines[1]);
    auto wl = chart_l.veronese_basis(d), wr = chart_r.veronese_basis(d);
    std::vector<Vector> w_gamma = wl;
    w_gamma.insert(w_gamma.end(), wr.begin(), wr.end());
    std::vector<Vector> lhs{inst.P.dual_coordinates()};
    for (const auto& x : veronese_points(sc.off, d)) lhs.push_back(x);
    auto og = named("O_Gamma", span_intersection(lhs, w_gamma));
    v.points.push_back(og);
    v.conditions.push_back({"(c.iii) O_Gamma", og.real, intersection_detail(og.at) + (og.real ? ", real" : "")});

    std::array<Split, 2> on_c{split_on_curve(sc.on, l), split_on_curve(sc.on, r)};
    std::array<Split, 2> on_r{split_on_curve(sr.on, l), split_on_curve(sr.on, r)};
    std::array<std::optional<Evince>, 4> ev;  // C on l, R on l, C on r, R on r
    if (og.at.unique()) {
        for (int side = 0; side < 2; ++side) {
            const auto& target = side == 0 ? wl : wr;
            const auto& other = side == 0 ? wr : wl;
            std::vector<Vector> src{*og.at.point};
            src.insert(src.end(), other.begin(), other.end());
            const std::string nm = side == 0 ? "l" : "r";
            auto o = named("O_" + nm, span_intersection(src, target));
            v.points.push_back(o);
            v.conditions.push_back({"(c.iv) O_" + nm, o.real, intersection_detail(o.at) + (o.real ? ", real" : "")});
            if (!o.at.unique()) continue;
            const auto& chart = side == 0 ? chart_l : chart_r;
            ev[2 * side] = evince_on_chart(inst, "S_C," + nm + " evinces r_C(O_" + nm + ")", *o.at.point, on_c[side].on, chart,
                                           FieldTag::GaussianRational);
            ev[2 * side + 1] = evince_on_chart(inst, "S_R," + nm + " evinces r_R(O_" + nm + ")", *o.at.point, on_r[side].on,
                                               chart, FieldTag::Rational);
            add_evince(v, "(c.iv) complex evinces " + nm, *ev[2 * side]);
            add_evince(v, "(c.iv) real evinces " + nm, *ev[2 * side + 1]);
        }
        // ranks on Gamma add up over the two disjoint spans
        for (int f = 0; f < 2; ++f) {
            const auto& a = ev[f];
            const auto& b = ev[2 + f];
            const FieldTag field = f == 0 ? FieldTag::GaussianRational : FieldTag::Rational;
            const auto& set = f == 0 ? sc.on : sr.on;
            Evince e;
            e.statement = f == 0 ? "S_C,Gamma evinces r_C(O_Gamma)" : "S_R,Gamma evinces r_R(O_Gamma)";
            e.field = field;
            e.set_size = set.size();
            if (a && b && a->rank && b->rank) {
                e.rank = *a->rank + *b->rank;
                e.certified = a->certified && b->certified;
            }
            e.member = safe_membership(inst, *og.at.point, set, field);
            e.passed = e.rank && e.certified && *e.rank == set.size() && e.member;
            add_evince(v, f == 0 ? "(c.iii) complex evinces" : "(c.iii) real evinces", e);
        }
    }
    attach_lemma(v, inst);
    finish(v);
    return v;
}

CaseReport classify(const Instance& inst, const VerifyOptions& opts)
{
    CaseReport rep;
    rep.seed = inst.seed;
    rep.hypotheses = check_hypotheses(inst);
    rep.rank_hypotheses = inst.minimality.empty() ? "assumed" : inst.minimality;
    if (!rep.hypotheses.front().passed) {
        rep.notes.push_back("input validation failed: " + rep.hypotheses.front().detail);
        return rep;
    }
    auto u = inst.S_C.united(inst.S_R);
    rep.h1_total = h1_ideal(u, inst.d);
    rep.detected = detect_structure(inst, opts);
    if (rep.detected.empty())
        rep.notes.push_back("dichotomy violated: no line with " + std::to_string(rep.detected.line_threshold) +
                            " points and no conic with " + std::to_string(rep.detected.conic_threshold) +
                            " points, input outside theorem scope");

    auto attempt = [&](auto&& fn, char label, const CurveSpec& c) {
        try {
            rep.verdicts.push_back(fn(inst, c));
        } catch (const Error& err) {
            CaseVerdict v;
            v.label = label;
            v.curve = c;
            v.notes.push_back(std::string("verification aborted: ") + err.what());
            rep.verdicts.push_back(std::move(v));
        }
    };
    for (const auto& l : rep.detected.lines) attempt(verify_case_a, 'a', l.curve);
    for (const auto& c : rep.detected.conics) attempt(verify_case_b, 'b', c.curve);
    if (inst.m >= 3)
        for (auto [i, j] : rep.detected.disjoint_pairs)
            attempt(verify_case_c, 'c',
                    CurveSpec::two_disjoint_lines(rep.detected.lines[i].curve.lines[0], rep.detected.lines[j].curve.lines[0]));

    const bool hyp = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(), [](const Check& c) { return c.passed; });
    for (const auto& v : rep.verdicts)
        if (v.passed) {
            rep.headline = v.label;
            break;
        }
    rep.overall = hyp && rep.headline != 0;

    if (rep.headline == 0 && inst.m >= 3 && inst.d >= 1) {
        auto near = find_rich_lines(u, inst.d + 1);
        for (std::size_t i = 0; i < near.size(); ++i)
            for (std::size_t j = i + 1; j < near.size(); ++j)
                if (near[i].count == inst.d + 1 && near[j].count == inst.d + 1 &&
                    lines_disjoint(near[i].curve.lines[0], near[j].curve.lines[0])) {
                    rep.notes.push_back("two disjoint lines with exactly d+1 points each: excluded, a line with d+1 points "
                                        "contributes nothing to h^1");
                    i = near.size();
                    break;
                }
    }
    return rep;
}

}  // namespace waringlab
