#pragma once

// Decision procedure for the real/complex rank dichotomy: hypothesis checks, rich
// curve detection, and per-case verdicts with every sub-condition recorded.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waringlab/instance.hpp"

namespace waringlab {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// An intersection point computed while verifying a case (P_l, P_C, O_Gamma, O_l, O_r).
struct NamedPoint {
    std::string name;
    Intersection at;
    /// Unique and with exactly real coordinates.
    bool real = false;
};

/// "set evinces the rank of point": #set equals the certified binary rank of the
/// point's restricted form, and the point lies in the span of the set.
struct Evince {
    std::string statement;
    FieldTag field = FieldTag::GaussianRational;
    std::size_t set_size = 0;
    std::optional<unsigned> rank;
    bool certified = false;
    bool member = false;
    bool passed = false;
};

struct CaseVerdict {
    char label = 0;
    CurveSpec curve;
    std::size_t count = 0;
    std::vector<Check> conditions;
    std::vector<NamedPoint> points;
    std::vector<Evince> evince;
    std::optional<LemmaC2Result> lemma;
    std::vector<std::string> notes;
    bool passed = false;

    const Check* condition(const std::string& name) const;
};

struct DetectedCurves {
    std::size_t line_threshold = 0;
    std::size_t conic_threshold = 0;
    std::vector<RichCurve> lines;
    std::vector<RichCurve> conics;
    /// Indices into `lines` of disjoint pairs.
    std::vector<std::pair<std::size_t, std::size_t>> disjoint_pairs;
    bool empty() const { return lines.empty() && conics.empty(); }
};

struct VerifyOptions {
    std::optional<std::size_t> line_threshold;
    std::optional<std::size_t> conic_threshold;
};

struct CaseReport {
    /// Seed of the verified instance (0 for raw triples).
    std::uint64_t seed = 0;
    std::vector<Check> hypotheses;
    /// "global" or "structural-only" from the factory, "assumed" for raw triples.
    std::string rank_hypotheses;
    SpanReport h1_total;
    DetectedCurves detected;
    std::vector<CaseVerdict> verdicts;
    bool overall = false;
    /// Label of the first passing verdict, 0 when none passes.
    char headline = 0;
    std::vector<std::string> notes;
};

/// Budget, rank inequality, memberships with the right fields, and h^1 > 0.
std::vector<Check> check_hypotheses(const Instance& inst);
DetectedCurves detect_structure(const Instance& inst, const VerifyOptions& opts = {});
CaseVerdict verify_case_a(const Instance& inst, const CurveSpec& line);
CaseVerdict verify_case_b(const Instance& inst, const CurveSpec& conic);
CaseVerdict verify_case_c(const Instance& inst, const CurveSpec& lines);
/// Overall pass iff the hypotheses hold and some detected curve passes its case.
/// Uses only P, S_C, S_R, m and d of the instance.
CaseReport classify(const Instance& inst, const VerifyOptions& opts = {});

}  // namespace waringlab
