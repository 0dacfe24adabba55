#pragma once

// JSON serialization with rationals as "p/q" strings. Field order is fixed so equal
// inputs give byte-identical files.

#include <string>

#include <json.hpp>

#include "waringlab/binary.hpp"
#include "waringlab/instance.hpp"
#include "waringlab/verifier.hpp"

namespace waringlab {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"m", "d", "terms": [{"exp", "re", "im"}]} with m + 1 variables.
Json to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const Json& j);

/// {"m", "points": [[{"re", "im"} x (m+1)]]}
Json to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

Json to_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);

Json to_json(const Ball& b);
Json to_json(const BinaryDecomposition& dec);
Json to_json(const RankResult& r);
Json to_json(const SpanReport& r);

Json to_json(const Instance& inst);
/// Raw triples need only m, d, P, S_C and S_R.
Instance instance_from_json(const Json& j);

Json to_json(const CaseReport& r);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace waringlab
