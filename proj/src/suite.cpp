#include "waringlab/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "waringlab/io.hpp"
#include "waringlab/upoly.hpp"

namespace waringlab {

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult criterion(int id, std::string title)
{
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << " s";
    return os.str();
}

// Smallest r with a square-free form among the {-1,0,1}-combinations of a basis of
// the apolar kernel, built here from the Hankel equations directly.
unsigned brute_force_rank(const std::vector<Rational>& c)
{
    const unsigned d = static_cast<unsigned>(c.size()) - 1;
    for (unsigned r = 1; r <= d + 1; ++r) {
        std::vector<Vector> rows;
        for (unsigned i = 0; i + r <= d; ++i) {
            Vector row;
            for (unsigned j = 0; j <= r; ++j) row.push_back(Scalar(c[i + j]));
            rows.push_back(row);
        }
        std::vector<Vector> ker;
        if (rows.empty()) {
            for (unsigned j = 0; j <= r; ++j) {
                Vector e(r + 1);
                e[j] = Scalar(1);
                ker.push_back(e);
            }
        } else {
            ker = Matrix::from_rows(rows, r + 1).kernel();
        }
        if (ker.empty()) continue;
        std::vector<int> digits(ker.size(), -1);
        for (;;) {
            std::vector<Rational> g(r + 1, Rational(0));
            bool nonzero = false;
            for (std::size_t k = 0; k < ker.size(); ++k)
                if (digits[k] != 0)
                    for (unsigned j = 0; j <= r; ++j) g[j] += digits[k] * ker[k][j].re();
            for (const auto& x : g) nonzero = nonzero || sgn(x) != 0;
            if (nonzero) {
                // [0:1] is a root of multiplicity r - deg g
                QPoly poly(g);
                const int at_infinity = static_cast<int>(r) - poly.degree();
                if (at_infinity <= 1 && (poly.degree() == 0 || QPoly::gcd(poly, poly.derivative()).degree() == 0)) return r;
            }
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == 1) digits[k++] = -1;
            if (k == digits.size()) break;
            ++digits[k];
        }
    }
    return d + 1;
}

HomogeneousForm binary_terms(unsigned d, std::initializer_list<std::pair<unsigned, long>> terms)
{
    HomogeneousForm::Terms t;
    for (auto [ydeg, c] : terms) t.emplace(Exponent{d - ydeg, ydeg}, Scalar(c));
    return HomogeneousForm(2, d, t);
}

HomogeneousForm reconstruct(const BinaryDecomposition& dec, unsigned d)
{
    auto pts = dec.exact_points();
    auto lam = dec.exact_coeffs();
    std::vector<std::pair<Scalar, LinearForm>> terms;
    for (std::size_t i = 0; i < pts.size(); ++i) terms.emplace_back(lam[i], LinearForm(pts[i].coords()));
    return combine(terms, d);
}

struct Config {
    char c;
    unsigned d, m;
};

std::vector<Config> grid(char c)
{
    std::vector<Config> out;
    for (unsigned d = 3; d <= 6; ++d)
        for (unsigned m = 2; m <= 4; ++m) {
            if (c == 'c' && (d < 5 || m < 3)) continue;
            out.push_back({c, d, m});
        }
    return out;
}

const std::vector<std::string>& required_conditions(char c)
{
    static const std::vector<std::string> a{"(a.i)", "(a.ii) P_l", "(a.ii) complex evinces", "(a.ii) real evinces",
                                            "(a.iii) union", "(a.iii) strict"};
    static const std::vector<std::string> b{"(b.i)", "(b.ii) P_C", "(b.ii) complex evinces", "(b.ii) real evinces",
                                            "(b.iii) union", "(b.iii) strict", "(b.iv)"};
    static const std::vector<std::string> cc{"(c.i)", "(c.ii)", "(c.iii) O_Gamma", "(c.iii) complex evinces",
                                             "(c.iii) real evinces", "(c.iv) O_l", "(c.iv) O_r",
                                             "(c.iv) complex evinces l", "(c.iv) real evinces l",
                                             "(c.iv) complex evinces r", "(c.iv) real evinces r"};
    return c == 'a' ? a : c == 'b' ? b : cc;
}

struct RoundTrip {
    Config cfg{};
    std::uint64_t seed = 0;
    std::string name;
    std::string instance_text;
    std::string report_text;
    bool passed = false;
    std::string failure;
    // lemma coherence
    std::size_t lemma_checks = 0;
    std::size_t lemma_false = 0;
    // realness of intersection points in passing verdicts
    std::size_t points = 0;
    std::size_t real_points = 0;
};

constexpr std::size_t per_case = 50;

std::uint64_t instance_seed(std::uint64_t base, char c, std::size_t j)
{
    return splitmix64((base << 16) ^ (static_cast<std::uint64_t>(c) << 8) ^ j);
}

RoundTrip round_trip(const Config& cfg, std::uint64_t seed, std::size_t j)
{
    RoundTrip rt;
    rt.cfg = cfg;
    rt.seed = seed;
    rt.name = std::string(1, cfg.c) + "_d" + std::to_string(cfg.d) + "_m" + std::to_string(cfg.m) + "_" +
              std::to_string(j);
    try {
        auto inst = generate_instance(cfg.c, cfg.d, cfg.m, seed);
        auto rep = classify(inst);
        rt.instance_text = dump(to_json(inst));
        rt.report_text = dump(to_json(rep));

        const CaseVerdict* match = nullptr;
        for (const auto& v : rep.verdicts)
            if (v.label == cfg.c && v.passed) {
                match = &v;
                break;
            }
        if (!rep.overall) rt.failure = "overall verdict negative";
        else if (!match) rt.failure = "no passing verdict with the instance's label";
        else
            for (const auto& name : required_conditions(cfg.c)) {
                const auto* ch = match->condition(name);
                if (!ch || !ch->passed) {
                    rt.failure = name + (ch ? " failed" : " missing");
                    break;
                }
            }
        rt.passed = rt.failure.empty();

        for (const auto& v : rep.verdicts) {
            const auto* off = v.condition(std::string("(") + v.label + ".i)");
            if (v.lemma && v.lemma->hypothesis_holds && off && off->passed) {
                ++rt.lemma_checks;
                if (!v.lemma->equal) ++rt.lemma_false;
            }
        }
        if (inst.d > static_cast<unsigned>(inst.curve.degree())) {
            auto direct = lemma_c2_check(inst.S_C, inst.S_R, inst.curve, inst.d);
            if (direct.hypothesis_holds) {
                ++rt.lemma_checks;
                if (!direct.equal) ++rt.lemma_false;
            }
        }
        if (match)
            for (const auto& p : match->points) {
                ++rt.points;
                if (p.real) ++rt.real_points;
            }
    } catch (const std::exception& e) {
        rt.failure = std::string("exception: ") + e.what();
    }
    return rt;
}

std::vector<RoundTrip> round_trip_batch(const SuiteOptions& opts, unsigned threads)
{
    std::vector<std::pair<Config, std::uint64_t>> jobs;
    std::vector<std::size_t> local;
    for (char c : {'a', 'b', 'c'}) {
        auto g = grid(c);
        for (std::size_t j = 0; j < per_case; ++j) {
            jobs.emplace_back(g[j % g.size()], instance_seed(opts.seed, c, j));
            local.push_back(j);
        }
    }
    std::vector<RoundTrip> out(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = round_trip(jobs[i].first, jobs[i].second, local[i]); });
    return out;
}

CriterionResult criterion_1()
{
    auto r = criterion(1, "complex rank of x^a y^b (a+b <= 8) is max(a,b)+1 for a,b >= 1 (1 for pure powers) and matches the brute-force oracle");
    auto t0 = Clock::now();
    std::size_t total = 0, bad = 0;
    std::string first;
    for (unsigned d = 1; d <= 8; ++d)
        for (unsigned a = 0; a <= d; ++a) {
            const unsigned b = d - a;
            auto f = BinaryForm::from_homogeneous(HomogeneousForm(2, d, {{{a, b}, Scalar(1)}}));
            const unsigned got = complex_rank(f).rank;
            std::vector<Rational> scaled;
            for (const auto& s : f.scaled()) scaled.push_back(s.re());
            const unsigned oracle = brute_force_rank(scaled);
            ++total;
            // pure powers have rank 1; the law holds for a, b >= 1
            const unsigned law = (a == 0 || b == 0) ? 1 : std::max(a, b) + 1;
            if (got != law || got != oracle) {
                ++bad;
                if (first.empty())
                    first = "x^" + std::to_string(a) + " y^" + std::to_string(b) + ": rank " + std::to_string(got) +
                            ", oracle " + std::to_string(oracle);
            }
        }
    r.seconds = since(t0);
    r.passed = bad == 0 && r.seconds < 5;
    r.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " monomials, " + fmt_seconds(r.seconds) +
               " (limit 5 s)" + (first.empty() ? "" : "; first mismatch " + first);
    return r;
}

CriterionResult criterion_2()
{
    auto r = criterion(2, "2x^3-6xy^2 has (r_C, r_R) = (2, 3) with exact reconstructions");
    auto t0 = Clock::now();
    const auto f = binary_terms(3, {{0, 2}, {2, -6}});
    const auto bf = BinaryForm::from_homogeneous(f);
    auto cr = complex_rank(bf);
    auto rr = real_rank(bf);
    const LinearForm x_iy({Scalar(1), Scalar::i()}), x_miy({Scalar(1), -Scalar::i()});
    const LinearForm x({Scalar(1), Scalar(0)}), xpy({Scalar(1), Scalar(1)}), xmy({Scalar(1), Scalar(-1)});
    const bool complex_identity = power_of_linear(x_iy, 3) + power_of_linear(x_miy, 3) == f;
    const bool real_identity =
        Scalar(4) * power_of_linear(x, 3) - power_of_linear(xpy, 3) - power_of_linear(xmy, 3) == f;
    const bool exact = cr.decomposition.exact && rr.decomposition.exact;
    const bool rebuilt = exact && reconstruct(cr.decomposition, 3) == f && reconstruct(rr.decomposition, 3) == f;
    // the computed decompositions are the displayed ones
    bool same = false;
    if (exact) {
        auto cp = cr.decomposition.exact_points();
        auto rp = rr.decomposition.exact_points();
        PointSet c_set(1, cp), r_set(1, rp);
        same = c_set.same_set(PointSet(1, {ProjectivePoint(Vector{Scalar(1), Scalar::i()}),
                                           ProjectivePoint(Vector{Scalar(1), -Scalar::i()})})) &&
               r_set.same_set(PointSet(1, {ProjectivePoint(Vector{Scalar(1), Scalar(0)}),
                                           ProjectivePoint(Vector{Scalar(1), Scalar(1)}),
                                           ProjectivePoint(Vector{Scalar(1), Scalar(-1)})}));
    }
    r.seconds = since(t0);
    r.passed = cr.rank == 2 && rr.rank == 3 && rr.certified && complex_identity && real_identity && rebuilt && same &&
               r.seconds < 1;
    r.detail = "r_C = " + std::to_string(cr.rank) + ", r_R = " + std::to_string(rr.rank) +
               (rr.certified ? " (certified)" : " (uncertified)") + ", reconstructions " +
               (rebuilt && same ? "exact" : "differ") + ", " + fmt_seconds(r.seconds) + " (limit 1 s)";
    return r;
}

CriterionResult criterion_3(const SuiteOptions& opts)
{
    auto r = criterion(3, "d+1+k collinear points in P^2 have h^1 = k (d in 3..6, k in 0..3)");
    auto t0 = Clock::now();
    constexpr int configs = 100;
    std::size_t total = 0, bad = 0;
    for (unsigned d = 3; d <= 6; ++d)
        for (unsigned k = 0; k <= 3; ++k)
            for (int c = 0; c < configs; ++c) {
                std::mt19937_64 rng(splitmix64((opts.seed << 20) ^ (d << 16) ^ (k << 12) ^ static_cast<unsigned>(c)));
                auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
                Vector p, q;
                do {
                    p = Vector{Scalar(draw(-5, 5)), Scalar(draw(-5, 5)), Scalar(draw(-5, 5))};
                    q = Vector{Scalar(draw(-5, 5)), Scalar(draw(-5, 5)), Scalar(draw(-5, 5))};
                } while (span_rank(std::vector<Vector>{p, q}) != 2);
                PointSet s(2);
                while (s.size() < d + 1 + k) {
                    Rational t(draw(-20, 20), draw(1, 6));
                    t.canonicalize();
                    Vector v(3);
                    for (int i = 0; i < 3; ++i) v[i] = p[i] + Scalar(t) * q[i];
                    s.insert(ProjectivePoint(v));
                }
                ++total;
                if (h1_ideal(s, d).h1 != static_cast<long>(k)) ++bad;
            }
    r.seconds = since(t0);
    r.passed = bad == 0;
    r.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " configurations (" +
               std::to_string(configs) + " per (d, k)), " + fmt_seconds(r.seconds);
    return r;
}

CriterionResult criterion_4(const SuiteOptions& opts, unsigned threads)
{
    auto r = criterion(4, "factory instances with h^1 > 0 contain a line with d+2 or a conic with 2d+2 points");
    auto t0 = Clock::now();
    std::vector<Config> all;
    for (char c : {'a', 'b', 'c'})
        for (const auto& g : grid(c)) all.push_back(g);
    constexpr std::size_t n = 100;
    std::vector<int> status(n, 0);  // 0 ok, 1 no rich curve, 2 premise failed, 3 exception
    parallel_for(n, threads, [&](std::size_t i) {
        const auto& cfg = all[i % all.size()];
        try {
            auto inst = generate_instance(cfg.c, cfg.d, cfg.m, splitmix64((opts.seed << 24) ^ (0x4dULL << 16) ^ i));
            const auto u = inst.S_C.united(inst.S_R);
            if (inst.S_C.size() + inst.S_R.size() > 3 * cfg.d - 1 || h1_ideal(u, cfg.d).h1 <= 0) {
                status[i] = 2;
                return;
            }
            auto det = detect_structure(inst);
            bool rich = false;
            for (const auto& l : det.lines) rich = rich || l.count >= cfg.d + 2;
            for (const auto& c : det.conics) rich = rich || c.count >= 2 * cfg.d + 2;
            status[i] = rich ? 0 : 1;
        } catch (const std::exception&) {
            status[i] = 3;
        }
    });
    const auto ok = std::count(status.begin(), status.end(), 0);
    r.seconds = since(t0);
    r.passed = ok == static_cast<long>(n);
    r.detail = std::to_string(ok) + "/" + std::to_string(n) + " instances with a rich curve";
    if (!r.passed)
        r.detail += " (" + std::to_string(std::count(status.begin(), status.end(), 1)) + " without, " +
                    std::to_string(std::count(status.begin(), status.end(), 2)) + " outside premise, " +
                    std::to_string(std::count(status.begin(), status.end(), 3)) + " errors)";
    r.detail += ", " + fmt_seconds(r.seconds);
    return r;
}

// One off-curve point of S_R moved to a fresh point off the curve.
bool negative_control(const SuiteOptions& opts, std::size_t i)
{
    const unsigned d = 3 + static_cast<unsigned>(i % 4);
    const unsigned m = 2 + static_cast<unsigned>(i % 3);
    auto inst = generate_instance('a', d, m, splitmix64((opts.seed << 24) ^ (0x6eULL << 16) ^ i));
    auto off = split_on_curve(inst.S_R, inst.curve).off;
    if (off.empty()) return false;
    std::mt19937_64 rng(splitmix64(inst.seed ^ 0x9e37ULL));
    auto u = inst.S_C.united(inst.S_R);
    for (;;) {
        Vector v(m + 1);
        bool zero = true;
        for (auto& x : v) {
            x = Scalar(static_cast<long>(rng() % 11) - 5);
            zero = zero && x.is_zero();
        }
        if (zero) continue;
        ProjectivePoint q(v);
        if (u.contains(q) || inst.curve.contains(q)) continue;
        PointSet moved(m);
        for (const auto& p : inst.S_R) moved.insert(p == off[0] ? q : p);
        auto res = lemma_c2_check(inst.S_C, moved, inst.curve, d);
        return res.hypothesis_holds && !res.equal;
    }
}

CriterionResult criterion_6(const std::vector<RoundTrip>& batch, const SuiteOptions& opts, unsigned threads)
{
    auto r = criterion(6, "lemma check never concludes false on theorem instances; moved points conclude false");
    auto t0 = Clock::now();
    std::size_t checks = 0, violations = 0;
    for (const auto& rt : batch) {
        checks += rt.lemma_checks;
        violations += rt.lemma_false;
    }
    constexpr std::size_t controls = 20;
    std::vector<char> neg(controls, 0);
    parallel_for(controls, threads, [&](std::size_t i) {
        try {
            neg[i] = negative_control(opts, i) ? 1 : 0;
        } catch (const std::exception&) {
            neg[i] = 0;
        }
    });
    const auto neg_ok = std::count(neg.begin(), neg.end(), 1);
    r.seconds = since(t0);
    r.passed = violations == 0 && checks > 0 && neg_ok == static_cast<long>(controls);
    r.detail = std::to_string(checks) + " lemma checks with the hypothesis holding, " + std::to_string(violations) +
               " concluded false; negative controls " + std::to_string(neg_ok) + "/" + std::to_string(controls) +
               " concluded false";
    return r;
}

}  // namespace

unsigned thread_budget(unsigned requested)
{
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WARINGLAB_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string format_result(const CriterionResult& r)
{
    return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " -- " +
           r.detail;
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opts,
                                            const std::function<void(const CriterionResult&)>& report)
{
    const unsigned threads = thread_budget(opts.threads);
    std::vector<CriterionResult> out;
    auto emit = [&](CriterionResult r) {
        if (report) report(r);
        out.push_back(std::move(r));
    };

    emit(criterion_1());
    emit(criterion_2());
    emit(criterion_3(opts));
    emit(criterion_4(opts, threads));

    auto t0 = Clock::now();
    auto first = round_trip_batch(opts, threads);
    const double batch_seconds = since(t0);
    {
        auto r = criterion(5, "round trip: 50 instances per case classify with their own label, every sub-condition asserted");
        std::size_t ok = 0;
        std::array<std::size_t, 3> per{0, 0, 0};
        std::string first_failure;
        for (const auto& rt : first) {
            if (rt.passed) {
                ++ok;
                ++per[rt.cfg.c - 'a'];
            } else if (first_failure.empty()) {
                first_failure = rt.name + ": " + rt.failure;
            }
        }
        r.seconds = batch_seconds;
        r.passed = ok == first.size() && batch_seconds < 120;
        r.detail = std::to_string(ok) + "/" + std::to_string(first.size()) + " (a " + std::to_string(per[0]) + ", b " +
                   std::to_string(per[1]) + ", c " + std::to_string(per[2]) + "), " + fmt_seconds(batch_seconds) +
                   " (limit 120 s)" + (first_failure.empty() ? "" : "; first failure " + first_failure);
        emit(r);
    }
    emit(criterion_6(first, opts, threads));
    {
        auto r = criterion(7, "every P_l / P_C / O_Gamma / O_l / O_r of the round trip is exactly real");
        std::size_t pts = 0, real = 0;
        for (const auto& rt : first) {
            pts += rt.points;
            real += rt.real_points;
        }
        r.passed = pts > 0 && pts == real;
        r.detail = std::to_string(real) + "/" + std::to_string(pts) + " intersection points real";
        emit(r);
    }
    {
        auto t1 = Clock::now();
        auto second = round_trip_batch(opts, threads);
        auto r = criterion(8, "repeating the round trip with the same seeds gives byte-identical files");
        std::size_t same = 0;
        for (std::size_t i = 0; i < first.size(); ++i)
            if (!first[i].instance_text.empty() && first[i].instance_text == second[i].instance_text &&
                first[i].report_text == second[i].report_text)
                ++same;
        if (opts.out_dir) {
            std::filesystem::create_directories(*opts.out_dir);
            for (const auto& rt : first) {
                std::ofstream(*opts.out_dir / (rt.name + ".instance.json"), std::ios::binary) << rt.instance_text;
                std::ofstream(*opts.out_dir / (rt.name + ".report.json"), std::ios::binary) << rt.report_text;
            }
            // files read back must match the second run byte for byte
            std::size_t files_same = 0;
            for (std::size_t i = 0; i < first.size(); ++i) {
                std::ifstream a(*opts.out_dir / (first[i].name + ".instance.json"), std::ios::binary);
                std::ifstream b(*opts.out_dir / (first[i].name + ".report.json"), std::ios::binary);
                std::stringstream sa, sb;
                sa << a.rdbuf();
                sb << b.rdbuf();
                if (sa.str() == second[i].instance_text && sb.str() == second[i].report_text) ++files_same;
            }
            same = std::min(same, files_same);
        }
        r.seconds = since(t1);
        r.passed = same == first.size();
        r.detail = std::to_string(same) + "/" + std::to_string(first.size()) + " instance and report pairs identical";
        emit(r);
    }
    return out;
}

}  // namespace waringlab
