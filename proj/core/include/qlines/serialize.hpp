#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qlines/bounds.hpp"
#include "qlines/closure.hpp"
#include "qlines/lattice.hpp"
#include "qlines/negcurves.hpp"

namespace qlines::io {

using nlohmann::json;

// Lattice: a class is [h, e_1, ..., e_n]; a surface is {"n": k}.
json to_json(const DivisorClass& c);
DivisorClass divisor_from_json(const json& j, const SurfaceModel& s);
json to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const json& j);

// {"class": [...], "label": "H-E1-E2", "family": "line"}
json to_json(const NegCurve& c);

/// Configurations as arrays of class arrays, in list order.
json configurations_to_json(const ConfigurationSet& set);

/// Undirected DOT graph; vertex labels are class strings such as "H-E1-E2".
std::string to_dot(const CurveGraph& g, const std::string& name = "meet");

/// Values with more than this many digits serialize in structured form.
inline constexpr std::size_t kMaxInlineDigits = 10000;

/// {statement, formula, inputs, value, digits, log10, flags[, form]}. value is
/// a decimal string ("p/q" for non-integral rationals) when it has at most
/// kMaxInlineDigits digits, else {"binom": [a, b], "exponent": k}.
json to_json(const BoundReport& r, bool full_digits = false);

// Model files: {"points": [...], "lines": [[...], ...]}.
IncidenceModel model_from_json(const json& j);
json to_json(const IncidenceModel& m);
/// Throws ModelError when unreadable or malformed.
IncidenceModel load_model(const std::filesystem::path& path);

json to_json(const IncidenceModel& m, const ClosureResult& r);
json to_json(const IncidenceModel& m, const LeafPartition& p);
json to_json(const QuotientReport& q);
json distribution_to_json(const std::map<int, std::size_t>& hist);

}  // namespace qlines::io
