#include "waringlab/instance.hpp"

#include <algorithm>

namespace waringlab {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_rational(std::mt19937_64& rng, long num, long den)
{
    Rational q(draw(rng, -num, num), draw(rng, 1, den));
    q.canonicalize();
    return q;
}

Rational draw_nonzero(std::mt19937_64& rng, long num, long den)
{
    for (;;) {
        auto q = draw_rational(rng, num, den);
        if (sgn(q) != 0) return q;
    }
}

ProjectivePoint affine_p1(const Scalar& z) { return ProjectivePoint(Vector{Scalar(1), z}); }

std::vector<Vector> transpose_basis(const CurveEmbedding& emb)
{
    std::vector<Vector> phi(emb.basis.front().size(), Vector(emb.basis.size()));
    for (std::size_t k = 0; k < emb.basis.size(); ++k)
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i][k] = emb.basis[k][i];
    return phi;
}

std::vector<Vector> embedding_veronese(const CurveEmbedding& emb, unsigned d)
{
    auto phi = transpose_basis(emb);
    return parametrized_veronese_basis(phi, emb.degree(), d);
}

std::string count_detail(std::size_t have, const std::string& rel, std::size_t need)
{
    return std::to_string(have) + " " + rel + " " + std::to_string(need);
}

std::size_t on_curve_union(const CurvePart& g)
{
    PointSet u(1);
    for (const auto& p : g.complex_points) u.insert(p);
    for (const auto& p : g.real_points) u.insert(p);
    return u.size();
}

struct Piece {
    const CurvePart* part;
    const CurveEmbedding* emb;
    std::string name;
};

void check_shapes(unsigned m, unsigned d, const std::vector<Piece>& pieces, const PointSet& e)
{
    if (d < 1) throw Error("degree must be positive");
    for (const auto& pc : pieces) {
        const auto& b = pc.emb->basis;
        if (b.size() < 2 || b.size() > 3) throw Error("curve embedding needs 2 or 3 basis vectors");
        for (const auto& v : b)
            if (v.size() != m + 1) throw Error("curve embedding has the wrong ambient dimension");
        if (pc.part->n != pc.emb->degree() * d)
            throw Error("curve part degree " + std::to_string(pc.part->n) + " does not match the embedding");
        for (const auto& v : b)
            for (const auto& c : v)
                if (!c.is_real()) throw Error("curve embedding must be real");
    }
    if (e.ambient_dim() != m) throw Error("E has the wrong ambient dimension");
    if (!e.is_real()) throw Error("E must be real");
}

void check_budget(unsigned d, const std::vector<Piece>& pieces, const PointSet& e)
{
    std::size_t total = 2 * e.size();
    for (const auto& pc : pieces) total += pc.part->complex_points.size() + pc.part->real_points.size();
    if (total > 3 * d - 1)
        throw Error("budget 3d-1 violated: " + std::to_string(total) + " > " + std::to_string(3 * d - 1));
}

void add(Instance& inst, std::string name, bool passed, std::string detail = {})
{
    inst.certificates.push_back({std::move(name), passed, std::move(detail)});
}

// Builds P, S_C, S_R and the certificates shared by every case.
Instance assemble(unsigned m, unsigned d, char label, const std::vector<Piece>& pieces, const PointSet& e,
                  const CurveSpec& curve)
{
    Instance inst;
    inst.m = m;
    inst.d = d;
    inst.case_label = label;
    inst.curve = curve;
    inst.S_C = PointSet(m);
    inst.S_R = PointSet(m);

    const std::size_t n_mon = VeroneseSpace{m, d}.N() + 1;
    Vector p(n_mon);
    std::vector<Vector> curve_span;
    for (const auto& pc : pieces) {
        auto w = embedding_veronese(*pc.emb, d);
        const auto& c = pc.part->form.scaled();
        for (std::size_t k = 0; k < w.size(); ++k)
            for (std::size_t a = 0; a < n_mon; ++a) p[a] += c[k] * w[k][a];
        curve_span.insert(curve_span.end(), w.begin(), w.end());
        for (const auto& q : pc.part->complex_points)
            if (!inst.S_C.insert(ProjectivePoint(pc.emb->at(q))))
                throw Error("genericity: two complex decomposition points coincide");
        for (const auto& q : pc.part->real_points)
            if (!inst.S_R.insert(ProjectivePoint(pc.emb->at(q))))
                throw Error("genericity: two real decomposition points coincide");
    }
    for (const auto& x : e) {
        if (curve.contains(x)) throw Error("genericity: a point of E lies on the curve");
        auto v = veronese_point(x, d);
        for (std::size_t a = 0; a < n_mon; ++a) p[a] += v[a];
        inst.S_C.insert(x);
        inst.S_R.insert(x);
    }
    inst.P = HomogeneousForm::from_dual_coordinates(m + 1, d, p);
    if (inst.P.is_zero()) throw Error("genericity: P vanishes");

    add(inst, "P real", inst.P.is_real());
    auto cc = membership_coefficients(inst.P, inst.S_C);
    auto cr = membership_coefficients(inst.P, inst.S_R);
    auto all_nonzero = [](const std::optional<Vector>& v) {
        return v && std::none_of(v->begin(), v->end(), [](const Scalar& s) { return s.is_zero(); });
    };
    add(inst, "membership C", all_nonzero(cc), "P in <nu_d(S_C)> with nonzero coefficients");
    add(inst, "membership R", all_nonzero(cr) && inst.S_R.is_real() && std::all_of(cr->begin(), cr->end(), [](const Scalar& s) {
            return s.is_real();
        }), "P in <nu_d(S_R)> over R");
    if (cc) inst.coeffs_C = *cc;
    if (cr) inst.coeffs_R = *cr;

    const std::size_t total = inst.S_C.size() + inst.S_R.size();
    add(inst, "budget 3d-1", total <= 3 * d - 1, count_detail(total, "<=", 3 * d - 1));
    add(inst, "size inequality", inst.S_C.size() < inst.S_R.size(),
        count_detail(inst.S_C.size(), "<", inst.S_R.size()));

    auto off_c = split_on_curve(inst.S_C, curve).off;
    auto off_r = split_on_curve(inst.S_R, curve).off;
    add(inst, "coincide off curve", off_c.same_set(off_r) && off_c.same_set(e),
        std::to_string(off_c.size()) + " common off-curve points");

    for (const auto& pc : pieces) {
        auto rc = complex_rank(pc.part->form);
        add(inst, "binary complex rank" + pc.name, rc.rank == pc.part->complex_points.size(),
            count_detail(rc.rank, "==", pc.part->complex_points.size()));
        auto rr = real_rank(pc.part->form, pc.part->real_points);
        add(inst, "binary real rank" + pc.name, rr.certified && rr.rank == pc.part->real_points.size(),
            count_detail(rr.rank, "==", pc.part->real_points.size()) + (rr.certified ? "" : " (uncertified)"));
    }

    // <nu_d(E)> and <nu_d(curve)> are disjoint and nu_d(E) is independent
    auto ev = veronese_points(e, d);
    std::vector<Vector> joint = ev;
    joint.insert(joint.end(), curve_span.begin(), curve_span.end());
    const auto curve_rank = span_rank(curve_span);
    const auto e_rank = ev.empty() ? 0 : span_rank(ev);
    const auto joint_rank = span_rank(joint);
    add(inst, "span disjointness", e_rank == e.size() && joint_rank == e_rank + curve_rank,
        "rank " + std::to_string(joint_rank) + " = " + std::to_string(e_rank) + " + " + std::to_string(curve_rank));

    auto h1 = h1_ideal(inst.S_C.united(inst.S_R), d);
    add(inst, "h1 total positive", h1.h1 > 0, "h1 = " + std::to_string(h1.h1));

    inst.minimality = catalecticant_rank(inst.P) >= inst.S_C.size() ? "global" : "structural-only";
    return inst;
}

void require_all(const Instance& inst)
{
    for (const auto& c : inst.certificates)
        if (!c.passed) throw Error("genericity: certificate '" + c.name + "' failed (" + c.detail + ")");
}

Subspace span_of_embedding(const CurveEmbedding& emb)
{
    return Subspace::span_of(std::span<const Vector>(emb.basis));
}

}  // namespace

bool Instance::certificates_pass() const
{
    return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.passed; });
}

Vector CurveEmbedding::at(const ProjectivePoint& st) const
{
    if (st.ambient_dim() != 1) throw Error("curve parameter must lie on P^1");
    const unsigned deg = degree();
    Vector v(basis.front().size());
    for (unsigned k = 0; k <= deg; ++k) {
        Scalar w = pow(st.coords()[0], deg - k) * pow(st.coords()[1], k);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += w * basis[k][i];
    }
    return v;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

CurvePart curve_part_from_form(const BinaryForm& f, std::span<const ProjectivePoint> real_hints)
{
    auto rc = complex_rank(f);
    auto rr = real_rank(f, real_hints);
    if (!rc.decomposition.exact || !rr.decomposition.exact)
        throw Error("genericity: decomposition points are not rational over Q(i)");
    if (!rr.certified) throw Error("genericity: real rank not certified");
    CurvePart part;
    part.n = f.degree();
    part.form = f;
    part.complex_points = rc.decomposition.exact_points();
    part.complex_coeffs = rc.decomposition.exact_coeffs();
    part.real_points = rr.decomposition.exact_points();
    part.real_coeffs = rr.decomposition.exact_coeffs();
    return part;
}

CurvePart make_gap_form(unsigned n, unsigned r, std::mt19937_64& rng)
{
    if (r < 2 || 2 * r > n + 1) throw Error("gap form needs 2 <= r and 2r <= n+1");
    const unsigned nr = n + 2 - r;
    for (int attempt = 0; attempt < 200; ++attempt) {
        PointSet used(1);
        std::vector<ProjectivePoint> cpts, rpts;
        bool ok = true;
        for (unsigned i = 0; i + 1 < r && ok; i += 2) {
            Scalar z(draw_rational(rng, 3, 2), draw_nonzero(rng, 3, 2));
            auto p = affine_p1(z), q = affine_p1(z.conj());
            ok = used.insert(p) && used.insert(q);
            cpts.push_back(p);
            cpts.push_back(q);
        }
        if (r % 2 == 1) {
            auto p = affine_p1(Scalar(draw_nonzero(rng, 6, 4)));
            ok = ok && used.insert(p);
            cpts.push_back(p);
        }
        for (unsigned i = 0; i < nr && ok; ++i) {
            auto p = affine_p1(Scalar(draw_nonzero(rng, 6, 4)));
            ok = used.insert(p);
            rpts.push_back(p);
        }
        if (!ok) continue;

        std::vector<Vector> cols;
        for (const auto& p : cpts) cols.push_back(veronese_point(p, n));
        for (const auto& p : rpts) {
            auto v = veronese_point(p, n);
            for (auto& x : v) x = -x;
            cols.push_back(v);
        }
        auto ker = Matrix::from_columns(cols, n + 1).kernel();
        if (ker.size() != 1) continue;
        const auto& k = ker[0];
        if (std::any_of(k.begin(), k.end(), [](const Scalar& s) { return s.is_zero(); })) continue;

        Vector f(n + 1);
        for (unsigned i = 0; i < r; ++i) {
            auto v = veronese_point(cpts[i], n);
            for (unsigned j = 0; j <= n; ++j) f[j] += k[i] * v[j];
        }
        auto lead = std::find_if(f.begin(), f.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (lead == f.end()) continue;
        const Scalar scale = lead->inverse();
        for (auto& x : f) x *= scale;
        if (!std::all_of(f.begin(), f.end(), [](const Scalar& s) { return s.is_real(); })) continue;

        CurvePart part;
        part.n = n;
        part.form = BinaryForm(f);
        part.complex_points = cpts;
        part.real_points = rpts;
        for (unsigned i = 0; i < r; ++i) part.complex_coeffs.push_back(k[i] * scale);
        for (unsigned i = 0; i < nr; ++i) part.real_coeffs.push_back(k[r + i] * scale);
        return part;
    }
    throw Error("genericity: no gap form found");
}

Instance make_case_a(unsigned m, unsigned d, const CurvePart& gap, const PointSet& e, const CurveEmbedding& line)
{
    if (line.degree() != 1) throw Error("case (a) needs a line embedding");
    std::vector<Piece> pieces{{&gap, &line, ""}};
    check_shapes(m, d, pieces, e);
    check_budget(d, pieces, e);
    const auto on = on_curve_union(gap);
    if (on < d + 2) throw Error("(a.iii) violated: " + count_detail(on, "<", d + 2) + " points on the line");
    auto l = span_of_embedding(line);
    if (l.projective_dim() != 1) throw Error("degenerate parametrization: line basis is dependent");

    auto inst = assemble(m, d, 'a', pieces, e, CurveSpec::line(l));
    auto on_l = split_on_curve(inst.S_C.united(inst.S_R), inst.curve).on;
    add(inst, "(a.iii) threshold", on_l.size() >= d + 2, count_detail(on_l.size(), ">=", d + 2));
    PointSet probe = e;
    for (std::size_t i = 0; i < on_l.size() && i < d + 1; ++i) probe.insert(on_l[i]);
    auto rep = h1_ideal(probe, d);
    add(inst, "h1 E plus d+1 line points", rep.h1 == 0, "h1 = " + std::to_string(rep.h1));
    require_all(inst);
    return inst;
}

Instance make_case_b(unsigned m, unsigned d, const CurvePart& gap, const PointSet& e, const CurveEmbedding& conic)
{
    if (conic.degree() != 2) throw Error("case (b) needs a conic embedding");
    std::vector<Piece> pieces{{&gap, &conic, ""}};
    check_shapes(m, d, pieces, e);
    check_budget(d, pieces, e);
    const auto on = on_curve_union(gap);
    if (on < 2 * d + 2) throw Error("(b.iii) violated: " + count_detail(on, "<", 2 * d + 2) + " points on the conic");
    if (span_rank(conic.basis) != 3) throw Error("degenerate parametrization: conic basis is dependent");

    std::vector<ProjectivePoint> five;
    for (int k = 0; k < 5; ++k) five.push_back(ProjectivePoint(conic.at(ProjectivePoint(Vector{Scalar(1), Scalar(k)}))));
    auto c = conic_through(five);
    if (!c || c->kind != CurveKind::SmoothConic) throw Error("degenerate parametrization: image is not a smooth conic");

    auto inst = assemble(m, d, 'b', pieces, e, *c);
    auto on_c = split_on_curve(inst.S_C.united(inst.S_R), inst.curve).on;
    add(inst, "(b.iii) threshold", on_c.size() >= 2 * d + 2, count_detail(on_c.size(), ">=", 2 * d + 2));
    require_all(inst);
    return inst;
}

Instance make_case_b_reducible(unsigned m, unsigned d, const CurvePart& gap1, const CurvePart& gap2,
                               const CurveEmbedding& line1, const CurveEmbedding& line2)
{
    if (line1.degree() != 1 || line2.degree() != 1) throw Error("reducible conic needs two line embeddings");
    std::vector<Piece> pieces{{&gap1, &line1, " [branch 1]"}, {&gap2, &line2, " [branch 2]"}};
    const PointSet e(m);
    check_shapes(m, d, pieces, e);
    check_budget(d, pieces, e);
    if (!proportional(line1.basis[0], line2.basis[0])) throw Error("(b.iv) branches must share basis[0] as the node");
    auto l1 = span_of_embedding(line1), l2 = span_of_embedding(line2);
    if (l1.projective_dim() != 1 || l2.projective_dim() != 1 || l1 == l2)
        throw Error("degenerate parametrization: branches must be two distinct lines");
    const auto on = on_curve_union(gap1) + on_curve_union(gap2);
    if (on < 2 * d + 2) throw Error("(b.iii) violated: " + count_detail(on, "<", 2 * d + 2) + " points on the conic");
    const ProjectivePoint node_param(Vector{Scalar(1), Scalar(0)});
    for (const auto* g : {&gap1, &gap2}) {
        PointSet u(1);
        for (const auto& p : g->complex_points) u.insert(p);
        for (const auto& p : g->real_points) u.insert(p);
        if (u.contains(node_param)) throw Error("(b.iv) violated: a decomposition point sits at the node");
        if (u.size() < d + 1) throw Error("(b.iv) violated: " + count_detail(u.size(), "<", d + 1) + " points off the node");
    }

    auto inst = assemble(m, d, 'b', pieces, e, CurveSpec::line_pair(l1, l2));
    auto all = inst.S_C.united(inst.S_R);
    add(inst, "(b.iii) threshold", all.size() >= 2 * d + 2, count_detail(all.size(), ">=", 2 * d + 2));
    const auto node = *inst.curve.node();
    for (std::size_t b = 0; b < 2; ++b) {
        auto on_b = split_on_curve(all, CurveSpec::line(inst.curve.lines[b])).on;
        const bool has_node = on_b.contains(node);
        const auto off_node = on_b.size() - (has_node ? 1 : 0);
        add(inst, "(b.iv) branch " + std::to_string(b + 1) + " off node", off_node >= d + 1,
            count_detail(off_node, ">=", d + 1));
    }
    require_all(inst);
    return inst;
}

Instance make_case_c(unsigned m, unsigned d, const CurvePart& gap_l, const CurvePart& gap_r, const PointSet& e,
                     const CurveEmbedding& l, const CurveEmbedding& r)
{
    if (m < 3) throw Error("m >= 3 required: two disjoint lines do not fit in P^2");
    if (l.degree() != 1 || r.degree() != 1) throw Error("case (c) needs two line embeddings");
    std::vector<Piece> pieces{{&gap_l, &l, " [l]"}, {&gap_r, &r, " [r]"}};
    check_shapes(m, d, pieces, e);
    check_budget(d, pieces, e);
    for (const auto* g : {&gap_l, &gap_r}) {
        const auto on = on_curve_union(*g);
        if (on < d + 2) throw Error("(c.ii) violated: " + count_detail(on, "<", d + 2) + " points on a line");
    }
    auto sl = span_of_embedding(l), sr = span_of_embedding(r);
    if (sl.projective_dim() != 1 || sr.projective_dim() != 1)
        throw Error("degenerate parametrization: line basis is dependent");
    if (!lines_disjoint(sl, sr)) throw Error("lines-not-disjoint: the two lines meet");

    auto inst = assemble(m, d, 'c', pieces, e, CurveSpec::two_disjoint_lines(sl, sr));
    auto all = inst.S_C.united(inst.S_R);
    for (std::size_t b = 0; b < 2; ++b) {
        auto on_b = split_on_curve(all, CurveSpec::line(inst.curve.lines[b])).on;
        add(inst, std::string("(c.ii) threshold ") + (b == 0 ? "l" : "r"), on_b.size() >= d + 2,
            count_detail(on_b.size(), ">=", d + 2));
    }

    auto wl = embedding_veronese(l, d), wr = embedding_veronese(r, d);
    std::vector<Vector> w_gamma = wl;
    w_gamma.insert(w_gamma.end(), wr.begin(), wr.end());
    std::vector<Vector> lhs{inst.P.dual_coordinates()};
    for (const auto& v : veronese_points(e, d)) lhs.push_back(v);
    auto o_gamma = span_intersection(lhs, w_gamma);
    add(inst, "(c.iii) O_Gamma unique", o_gamma.unique() && std::all_of(o_gamma.point->begin(), o_gamma.point->end(), [](const Scalar& s) {
            return s.is_real();
        }), "dim " + std::to_string(o_gamma.dim));
    if (o_gamma.unique()) {
        for (int side = 0; side < 2; ++side) {
            const auto& target = side == 0 ? wl : wr;
            const auto& other = side == 0 ? wr : wl;
            std::vector<Vector> src{*o_gamma.point};
            src.insert(src.end(), other.begin(), other.end());
            auto o = span_intersection(src, target);
            add(inst, std::string("(c.iv) O_") + (side == 0 ? "l" : "r") + " unique",
                o.unique() && std::all_of(o.point->begin(), o.point->end(), [](const Scalar& s) { return s.is_real(); }),
                "dim " + std::to_string(o.dim));
        }
    }
    require_all(inst);
    return inst;
}

namespace {

Vector random_int_vector(std::mt19937_64& rng, unsigned len, long bound)
{
    Vector v(len);
    for (auto& x : v) x = Scalar(static_cast<long>(draw(rng, -bound, bound)));
    return v;
}

// k random integer vectors of length m+1 spanning a k-dimensional space.
std::vector<Vector> random_frame(std::mt19937_64& rng, unsigned m, unsigned k)
{
    for (;;) {
        std::vector<Vector> b;
        for (unsigned i = 0; i < k; ++i) b.push_back(random_int_vector(rng, m + 1, 3));
        if (span_rank(b) == k) return b;
    }
}

PointSet random_off_points(std::mt19937_64& rng, unsigned m, std::size_t count)
{
    PointSet e(m);
    while (e.size() < count) {
        auto v = random_int_vector(rng, m + 1, 4);
        if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        e.insert(ProjectivePoint(v));
    }
    return e;
}

}  // namespace

Instance generate_instance(char case_label, unsigned d, unsigned m, std::uint64_t seed)
{
    if (case_label != 'a' && case_label != 'b' && case_label != 'c') throw Error("case must be a, b or c");
    if (d < 3) throw Error("d >= 3 required: binary forms of degree <= 2 have equal real and complex rank");
    if (m < 2) throw Error("m >= 2 required");
    if (case_label == 'c' && m < 3) throw Error("m >= 3 required: two disjoint lines do not fit in P^2");
    if (case_label == 'c' && d < 5) throw Error("budget 3d-1: two lines with d+2 points each need d >= 5");

    const std::uint64_t mix = (static_cast<std::uint64_t>(case_label) << 56) ^ (static_cast<std::uint64_t>(d) << 48) ^
                              (static_cast<std::uint64_t>(m) << 40);
    std::mt19937_64 rng(splitmix64(seed ^ mix));
    const unsigned r_line = (d + 1) / 2;

    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            Instance inst;
            if (case_label == 'a') {
                auto gap = make_gap_form(d, r_line, rng);
                CurveEmbedding line{random_frame(rng, m, 2)};
                auto e = random_off_points(rng, m, (2 * d - 3) / 2);
                inst = make_case_a(m, d, gap, e, line);
            } else if (case_label == 'b' && (d < 5 || seed % 2 == 0)) {
                auto gap = make_gap_form(2 * d, d, rng);
                CurveEmbedding conic{random_frame(rng, m, 3)};
                auto e = random_off_points(rng, m, (d - 3) / 2);
                inst = make_case_b(m, d, gap, e, conic);
            } else if (case_label == 'b') {
                auto g1 = make_gap_form(d, r_line, rng);
                auto g2 = make_gap_form(d, r_line, rng);
                auto frame = random_frame(rng, m, 3);
                CurveEmbedding l1{{frame[0], frame[1]}}, l2{{frame[0], frame[2]}};
                inst = make_case_b_reducible(m, d, g1, g2, l1, l2);
            } else {
                auto gl = make_gap_form(d, r_line, rng);
                auto gr = make_gap_form(d, r_line, rng);
                auto frame = random_frame(rng, m, 4);
                CurveEmbedding l{{frame[0], frame[1]}}, r{{frame[2], frame[3]}};
                inst = make_case_c(m, d, gl, gr, PointSet(m), l, r);
            }
            inst.seed = seed;
            return inst;
        } catch (const Error& err) {
            if (std::string_view(err.what()).starts_with("genericity") ||
                std::string_view(err.what()).starts_with("degenerate"))
                continue;
            throw;
        }
    }
    throw Error("genericity: no instance found after 100 attempts");
}

}  // namespace waringlab
