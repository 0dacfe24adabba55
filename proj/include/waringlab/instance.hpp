#pragma once

// Ground-truth instances for the three cases of the real/complex rank dichotomy,
// assembled from binary gap forms on rational normal curves.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "waringlab/binary.hpp"
#include "waringlab/points.hpp"
#include "waringlab/spans.hpp"

namespace waringlab {

/// Named exact check recomputed from the instance data.
struct Certificate {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Instance {
    unsigned m = 0;
    unsigned d = 0;
    HomogeneousForm P{1, 1};
    PointSet S_C{0};
    PointSet S_R{0};
    /// P = sum coeffs_C[i] (S_C[i] . x)^d on canonical representatives; likewise for S_R.
    Vector coeffs_C;
    Vector coeffs_R;
    CurveSpec curve;
    /// 'a', 'b', 'c', or 0 for a raw triple without ground truth.
    char case_label = 0;
    std::uint64_t seed = 0;
    std::vector<Certificate> certificates;
    /// "global" when the catalecticant bound reaches #S_C, else "structural-only".
    std::string minimality;

    bool certificates_pass() const;
};

/// A binary gap form of degree n with explicit complex and real decompositions,
/// in coordinates [s:t] of P^1.
struct CurvePart {
    unsigned n = 0;
    BinaryForm form{Vector{Scalar(1)}};
    std::vector<ProjectivePoint> complex_points;
    Vector complex_coeffs;
    std::vector<ProjectivePoint> real_points;
    Vector real_coeffs;
};

/// [s:t] -> sum_k s^(deg-k) t^k basis[k]: a line (two vectors) or a conic (three).
struct CurveEmbedding {
    std::vector<Vector> basis;
    unsigned degree() const { return static_cast<unsigned>(basis.size()) - 1; }
    Vector at(const ProjectivePoint& st) const;
};

/// Minimal decompositions from Sylvester's algorithm; both must be exact and the real
/// rank certified. `real_hints` are tried first as the real support.
CurvePart curve_part_from_form(const BinaryForm& f, std::span<const ProjectivePoint> real_hints = {});
/// Random gap form: r complex points (with a conjugate pair, 2r <= n+1) and n+2-r real
/// points whose spans meet in exactly one real point. Real coordinates are nonzero.
CurvePart make_gap_form(unsigned n, unsigned r, std::mt19937_64& rng);

/// Errors name the violated condition: "budget 3d-1", "(a.iii)", "(b.iii)", "(b.iv)",
/// "(c.ii)", "m >= 3", "genericity", "degenerate parametrization".
Instance make_case_a(unsigned m, unsigned d, const CurvePart& gap, const PointSet& e, const CurveEmbedding& line);
Instance make_case_b(unsigned m, unsigned d, const CurvePart& gap, const PointSet& e, const CurveEmbedding& conic);
/// Two concurrent lines sharing basis[0] (the node), which must stay outside S.
Instance make_case_b_reducible(unsigned m, unsigned d, const CurvePart& gap1, const CurvePart& gap2,
                               const CurveEmbedding& line1, const CurveEmbedding& line2);
Instance make_case_c(unsigned m, unsigned d, const CurvePart& gap_l, const CurvePart& gap_r, const PointSet& e,
                     const CurveEmbedding& l, const CurveEmbedding& r);

/// Seeded end-to-end generator. Identical arguments give identical instances.
Instance generate_instance(char case_label, unsigned d, unsigned m, std::uint64_t seed);

/// splitmix64 step, used to derive independent per-instance seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace waringlab
