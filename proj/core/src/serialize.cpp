#include "qlines/serialize.hpp"

#include <fstream>
#include <sstream>

#include "qlines/errors.hpp"

namespace qlines::io {

json to_json(const DivisorClass& c) { return c.coefficients(); }

DivisorClass divisor_from_json(const json& j, const SurfaceModel& s) {
  if (!j.is_array() || j.empty()) throw DomainError("divisor class must be a non-empty JSON array [h, e1, ...]");
  if (j.size() != static_cast<std::size_t>(s.n()) + 1) {
    throw DimensionMismatch("divisor class has " + std::to_string(j.size() - 1) + " exceptional coefficients, surface has n=" +
                            std::to_string(s.n()));
  }
  std::vector<std::int64_t> e;
  for (std::size_t i = 1; i < j.size(); ++i) e.push_back(j[i].get<std::int64_t>());
  return DivisorClass(j[0].get<std::int64_t>(), std::move(e));
}

json to_json(const SurfaceModel& s) { return json{{"n", s.n()}}; }

SurfaceModel surface_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw DomainError("surface must be {\"n\": <integer>}");
  }
  return SurfaceModel(j["n"].get<int>());
}

json to_json(const NegCurve& c) {
  return json{{"class", to_json(c.cls)}, {"label", c.cls.to_string()}, {"family", std::string(to_string(c.family))}};
}

json configurations_to_json(const ConfigurationSet& set) {
  json out = json::array();
  for (const auto& config : set.configurations) {
    json one = json::array();
    for (auto i : config) one.push_back(to_json(set.graph.curves().at(i).cls));
    out.push_back(std::move(one));
  }
  return out;
}

std::string to_dot(const CurveGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& c = g.curves()[i];
    os << "  v" << i << " [label=\"" << c.cls.to_string() << "\", family=\"" << to_string(c.family) << "\"];\n";
  }
  for (auto [i, j] : g.edges()) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

json to_json(const BoundReport& r, bool full_digits) {
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json j{{"statement", r.statement}, {"formula", r.formula}, {"inputs", inputs},
         {"digits", r.digits()},     {"log10", r.log10},     {"flags", r.flags}};
  if (r.form) j["form"] = json{{"binom", {r.form->top, r.form->bottom}}, {"exponent", r.form->exponent}};
  if (full_digits || r.digits() <= kMaxInlineDigits || !r.form) {
    j["value"] = to_decimal_string(r.value);
  } else {
    j["value"] = j["form"];
  }
  return j;
}

IncidenceModel model_from_json(const json& j) {
  if (!j.is_object()) throw ModelError("model must be a JSON object with \"points\" and \"lines\"");
  if (!j.contains("points") || !j["points"].is_array()) throw ModelError("model: missing \"points\" array");
  if (!j.contains("lines") || !j["lines"].is_array()) throw ModelError("model: missing \"lines\" array");
  std::vector<std::string> points;
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const auto& p = j["points"][i];
    if (!p.is_string()) throw ModelError("point " + std::to_string(i) + ": id must be a string");
    points.push_back(p.get<std::string>());
  }
  std::vector<std::vector<std::string>> lines;
  for (std::size_t i = 0; i < j["lines"].size(); ++i) {
    const auto& l = j["lines"][i];
    if (!l.is_array()) throw ModelError("line " + std::to_string(i) + ": must be an array of point ids");
    std::vector<std::string> line;
    for (const auto& p : l) {
      if (!p.is_string()) throw ModelError("line " + std::to_string(i) + ": point ids must be strings");
      line.push_back(p.get<std::string>());
    }
    lines.push_back(std::move(line));
  }
  return IncidenceModel(std::move(points), std::move(lines));
}

json to_json(const IncidenceModel& m) { return json{{"points", m.points()}, {"lines", m.line_names()}}; }

IncidenceModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read model file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ModelError("model file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

json to_json(const IncidenceModel& m, const ClosureResult& r) {
  json chain = json::array();
  for (const auto& v : r.chain) chain.push_back(m.names(v));
  return json{{"basepoint", r.basepoint}, {"seed", r.seed},       {"leaf", m.names(r.leaf)},
              {"size", r.leaf.count()},   {"chain", chain},       {"stable", r.stable},
              {"no_line", r.no_line}};
}

json to_json(const IncidenceModel& m, const LeafPartition& p) {
  json leaves = json::array();
  for (const auto& l : p.leaves) {
    leaves.push_back(json{{"points", m.names(l.points)}, {"size", l.points.count()}, {"seeds", l.seeds},
                          {"no_line", l.no_line}});
  }
  json overlaps = json::array();
  for (auto [a, b] : p.overlaps) overlaps.push_back({a, b});
  return json{{"basepoint", p.basepoint}, {"leaves", leaves}, {"overlaps", overlaps}};
}

json distribution_to_json(const std::map<int, std::size_t>& hist) {
  json j = json::object();
  for (const auto& [e, count] : hist) j[std::to_string(e)] = count;
  return j;
}

json to_json(const QuotientReport& q) {
  json j{{"applicable", q.applicable}};
  if (!q.applicable) {
    j["reason"] = q.reason;
    return j;
  }
  j["quotient"] = to_json(*q.quotient);
  j["line_multiplicity"] = q.line_multiplicity;
  j["e_distribution"] = distribution_to_json(q.distribution);
  j["e_at_most_one"] = q.e_at_most_one;
  return j;
}

}  // namespace qlines::io
