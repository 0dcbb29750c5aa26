#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "qlines/bounds.hpp"
#include "qlines/closure.hpp"
#include "qlines/errors.hpp"
#include "qlines/negcurves.hpp"
#include "qlines/serialize.hpp"

namespace qlines::cli {

namespace {

using nlohmann::json;

// Values longer than this print as the binom form in tables unless --full.
constexpr std::size_t kTableDigits = 40;

struct Options {
  bool as_json = false;
  bool full = false;

  int n = 0;
  std::optional<int> k;
  std::string family;

  std::int64_t deg_l = 0, deg_X = 0, d = 0, surf_deg = 0;
  std::optional<std::int64_t> h0;
  int dim = 0, rank = 0, sing_dim = 0;
  std::optional<int> profile_n, profile_sing;
  std::int64_t D2 = 0, H2 = 0, DH = 0, D2H = 0, H3 = 0, DH2 = 0;

  std::string model, x, y;
};

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c + 1 < row.size()) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    out << line << '\n';
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string set_string(const std::vector<std::string>& names) { return "{" + join(names, ",") + "}"; }

std::optional<Family> family_option(const std::string& name) {
  if (name.empty() || name == "all") return std::nullopt;
  auto f = parse_family(name);
  if (!f) throw DomainError("unknown family '" + name + "' (exceptional, line, conic, higher, all)");
  return f;
}

std::filesystem::path resolve_model(const std::string& arg) {
  std::filesystem::path p(arg);
  if (std::filesystem::exists(p) || p.is_absolute()) return p;
  const char* env = std::getenv("QL_FIXTURES");
  const std::filesystem::path dir = env != nullptr ? std::filesystem::path(env) : std::filesystem::path(QLINES_DEFAULT_FIXTURE_DIR);
  return dir / p;
}

void print_report(std::ostream& out, const BoundReport& r, const Options& o) {
  if (o.as_json) {
    out << io::to_json(r, o.full).dump(2) << '\n';
    return;
  }
  std::vector<std::string> inputs;
  for (const auto& [k, v] : r.inputs) inputs.push_back(k + "=" + std::to_string(v));
  std::string value;
  if (r.form && r.digits() > kTableDigits && !o.full) {
    value = "binom(" + std::to_string(r.form->top) + "," + std::to_string(r.form->bottom) + ")^" +
            std::to_string(r.form->exponent) + " [" + std::to_string(r.digits()) + " digits]";
  } else {
    value = to_decimal_string(r.value);
  }
  std::ostringstream lg;
  lg << std::fixed << std::setprecision(6) << r.log10;
  std::vector<std::vector<std::string>> rows{
      {"statement", r.statement}, {"formula", r.formula}, {"inputs", join(inputs, " ")},
      {"value", value},           {"log10", lg.str()}};
  for (const auto& f : r.flags) rows.push_back({"flag", f});
  print_table(out, rows);
}

void print_bool(std::ostream& out, const Options& o, const std::string& key, bool v, json inputs) {
  if (o.as_json) {
    out << json{{"statement", key}, {"inputs", std::move(inputs)}, {"holds", v}}.dump(2) << '\n';
  } else {
    out << key << ": " << (v ? "holds" : "violated") << '\n';
  }
}

// --- dp ---------------------------------------------------------------------

void dp_curves(const Options& o, std::ostream& out) {
  const SurfaceModel s(o.n);
  auto curves = enumerate_minus_one(s);
  if (auto f = family_option(o.family)) curves = filter_family(curves, *f);
  if (o.as_json) {
    json list = json::array();
    for (const auto& c : curves) list.push_back(io::to_json(c));
    out << json{{"surface", io::to_json(s)}, {"count", curves.size()}, {"curves", list}}.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"#", "class", "family", "coefficients"}};
  for (std::size_t i = 0; i < curves.size(); ++i) {
    rows.push_back({std::to_string(i), curves[i].cls.to_string(), std::string(to_string(curves[i].family)),
                    io::to_json(curves[i].cls).dump()});
  }
  print_table(out, rows);
  out << "total: " << curves.size() << '\n';
}

void dp_configs(const Options& o, std::ostream& out, bool list) {
  const SurfaceModel s(o.n);
  const int k = o.k.value_or(o.n);
  const auto set = disjoint_configurations(s, k, family_option(o.family));
  const auto breakdown = configuration_breakdown(set);
  if (o.as_json) {
    json b = json::object();
    for (const auto& [cat, count] : breakdown) b[cat] = count;
    out << json{{"surface", io::to_json(s)},
                {"k", k},
                {"family", o.family.empty() ? "all" : o.family},
                {"curves", set.graph.size()},
                {"total", set.configurations.size()},
                {"breakdown", b},
                {"configurations", io::configurations_to_json(set)}}
               .dump(2)
        << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"total", std::to_string(set.configurations.size())}};
  for (const auto& [cat, count] : breakdown) rows.push_back({cat, std::to_string(count)});
  print_table(out, rows);
  if (list) {
    for (const auto& c : set.configurations) {
      std::vector<std::string> labels;
      for (auto i : c) labels.push_back(set.graph.curves()[i].cls.to_string());
      out << set_string(labels) << '\n';
    }
  }
}

void dp_graph(const Options& o, std::ostream& out) {
  const SurfaceModel s(o.n);
  auto curves = enumerate_minus_one(s);
  if (auto f = family_option(o.family)) curves = filter_family(curves, *f);
  const auto g = meet_graph(s, std::move(curves));
  if (!o.as_json) {
    out << io::to_dot(g);
    return;
  }
  json vertices = json::array();
  for (const auto& c : g.curves()) vertices.push_back(c.cls.to_string());
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  json j{{"vertices", vertices}, {"edges", edges}, {"edge_count", g.edge_count()}};
  j["regular_degree"] = g.regular_degree() ? json(*g.regular_degree()) : json(nullptr);
  j["girth"] = g.girth() ? json(*g.girth()) : json(nullptr);
  out << j.dump(2) << '\n';
}

// --- closure ----------------------------------------------------------------

void closure_lines(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const auto idx = lines_through(m, o.x);
  if (o.as_json) {
    json lines = json::array();
    for (auto i : idx) lines.push_back(m.names(m.line(i)));
    out << json{{"point", o.x}, {"count", idx.size()}, {"lines", lines}}.dump(2) << '\n';
    return;
  }
  for (auto i : idx) out << "line " << i << ": " << set_string(m.names(m.line(i))) << '\n';
  out << "count: " << idx.size() << '\n';
}

void closure_run(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const auto r = stable_closure(m, o.x, o.y);
  if (o.as_json) {
    out << io::to_json(m, r).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{
      {"basepoint", r.basepoint}, {"seed", r.seed}, {"leaf", set_string(m.names(r.leaf))},
      {"size", std::to_string(r.leaf.count())}, {"no_line", r.no_line ? "yes" : "no"}};
  for (std::size_t i = 0; i < r.chain.size(); ++i) rows.push_back({"V" + std::to_string(i), set_string(m.names(r.chain[i]))});
  print_table(out, rows);
}

void closure_e(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const int e = e_invariant(m, o.x, o.y);
  if (o.as_json) {
    out << json{{"x", o.x}, {"y", o.y}, {"e", e}}.dump(2) << '\n';
  } else {
    out << "e(" << o.x << "," << o.y << ") = " << e << '\n';
  }
}

void closure_dist(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const auto hist = e_distribution(m);
  if (o.as_json) {
    out << json{{"e_distribution", io::distribution_to_json(hist)}}.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"e", "pairs"}};
  for (const auto& [e, count] : hist) rows.push_back({std::to_string(e), std::to_string(count)});
  print_table(out, rows);
}

void closure_assumption(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const auto v = assumption_check(m);
  if (o.as_json) {
    json pairs = json::array();
    for (const auto& [a, b] : v) pairs.push_back({a, b});
    out << json{{"symmetric", v.empty()}, {"violations", pairs}}.dump(2) << '\n';
    return;
  }
  out << (v.empty() ? "symmetric: every joined pair has F(x,y) = F(y,x)\n"
                    : "asymmetric: " + std::to_string(v.size()) + " violating pair(s)\n");
  for (const auto& [a, b] : v) out << "  (" << a << ", " << b << ")\n";
}

void closure_partition(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const auto p = leaf_partition(m, o.x);
  if (o.as_json) {
    out << io::to_json(m, p).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"leaf", "size", "points", "seeds"}};
  for (std::size_t i = 0; i < p.leaves.size(); ++i) {
    const auto& l = p.leaves[i];
    rows.push_back({std::to_string(i), std::to_string(l.points.count()), set_string(m.names(l.points)),
                    join(l.seeds, ",") + (l.no_line ? " (no line)" : "")});
  }
  print_table(out, rows);
  for (auto [a, b] : p.overlaps) out << "overlap: leaves " << a << " and " << b << '\n';
}

void closure_quotient(const IncidenceModel& m, const Options& o, std::ostream& out) {
  const auto q = quotient_e_check(m, o.x);
  if (o.as_json) {
    out << io::to_json(q).dump(2) << '\n';
    return;
  }
  if (!q.applicable) {
    out << "not applicable: " << q.reason << '\n';
    return;
  }
  out << "quotient points: " << join(q.quotient->points(), ",") << '\n';
  for (std::size_t i = 0; i < q.quotient->line_count(); ++i) {
    out << "quotient line: " << set_string(q.quotient->names(q.quotient->line(i))) << " (x" << q.line_multiplicity[i]
        << ")\n";
  }
  for (const auto& [e, count] : q.distribution) out << "e=" << e << ": " << count << " pair(s)\n";
  out << "e <= 1 everywhere: " << (q.e_at_most_one ? "yes" : "no") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Del Pezzo (-1)-curves, quasi-line counting bounds and leaf closures"};
  app.name("qlines");
  app.require_subcommand(1);
  Options o;
  bool list = false;
  std::function<void()> action;

  auto json_flag = [&o](CLI::App* c) { c->add_flag("--json", o.as_json, "Emit JSON"); };

  // dp
  auto* dp = app.add_subcommand("dp", "(-1)-curves on the blow-up of P^2 in n points");
  dp->require_subcommand(1);
  auto surface_opts = [&](CLI::App* c) {
    c->add_option("--n", o.n, "Number of blown-up points (0..8)")->required();
    c->add_option("--family", o.family, "Restrict to exceptional|line|conic|higher");
    json_flag(c);
  };
  auto* curves = dp->add_subcommand("curves", "Enumerate (-1)-classes");
  surface_opts(curves);
  curves->callback([&] { action = [&] { dp_curves(o, out); }; });
  auto* configs = dp->add_subcommand("configs", "Count pairwise disjoint configurations");
  surface_opts(configs);
  configs->add_option("--k", o.k, "Configuration size (default n)");
  configs->add_flag("--list", list, "List configurations in table output");
  configs->callback([&] { action = [&] { dp_configs(o, out, list); }; });
  auto* graph = dp->add_subcommand("graph", "Meet graph in DOT (or --json)");
  surface_opts(graph);
  graph->callback([&] { action = [&] { dp_graph(o, out); }; });

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate counting bounds and inequalities");
  bound->require_subcommand(1);
  auto* dich = bound->add_subcommand("dichotomy", "16 deg_l^3 / deg_X");
  dich->add_option("--deg-l", o.deg_l)->required();
  dich->add_option("--deg-X", o.deg_X)->required();
  json_flag(dich);
  dich->callback([&] { action = [&] { print_report(out, dichotomy_bound(o.deg_l, o.deg_X), o); }; });

  auto* chow = bound->add_subcommand("chow", "binom(h0 max(d, surf_deg), h0 - 1)^(d^2 h0)");
  chow->add_option("--d", o.d)->required();
  chow->add_option("--surface-deg", o.surf_deg)->required();
  chow->add_option("--h0", o.h0, "Section count (default (d+1)(d+2)/2)");
  chow->add_flag("--full", o.full, "Print every digit");
  json_flag(chow);
  chow->callback([&] { action = [&] { print_report(out, chow_component_bound(o.d, o.surf_deg, o.h0), o); }; });

  auto* leaf = bound->add_subcommand("leaf", "Bound on E.l from the singular locus dimension");
  leaf->add_option("--n", o.dim)->required();
  leaf->add_option("--rank", o.rank)->required();
  leaf->add_option("--sing-dim", o.sing_dim)->required();
  json_flag(leaf);
  leaf->callback([&] {
    action = [&] { print_report(out, leaf_section_report(FoliationProfile(o.dim, o.rank, o.sing_dim)), o); };
  });

  auto* sing = bound->add_subcommand("sing", "Lower bound rank - 1 on the singular locus dimension");
  sing->add_option("--rank", o.rank)->required();
  sing->add_option("--n", o.profile_n, "Dimension (with --sing-dim: check a profile)");
  sing->add_option("--sing-dim", o.profile_sing);
  json_flag(sing);
  sing->callback([&] {
    action = [&] {
      const int lower = sing_dim_lower_bound(o.rank);
      std::optional<bool> consistent;
      if (o.profile_n || o.profile_sing) {
        if (!o.profile_n || !o.profile_sing) throw DomainError("--n and --sing-dim must be given together");
        consistent = sing_dim_consistent(FoliationProfile(*o.profile_n, o.rank, *o.profile_sing));
      }
      if (o.as_json) {
        json j{{"statement", "sing_dim_lower"}, {"rank", o.rank}, {"lower_bound", lower}};
        if (consistent) j["consistent"] = *consistent;
        out << j.dump(2) << '\n';
      } else {
        out << "sing_dim >= " << lower << '\n';
        if (consistent) out << "profile consistent: " << (*consistent ? "yes" : "no") << '\n';
      }
    };
  });

  auto* hs = bound->add_subcommand("hodge-surface", "(D^2)(H^2) <= (D.H)^2");
  hs->add_option("--D2", o.D2)->required();
  hs->add_option("--H2", o.H2)->required();
  hs->add_option("--DH", o.DH)->required();
  json_flag(hs);
  hs->callback([&] {
    action = [&] {
      print_bool(out, o, "hodge_surface", hodge_surface_check(o.D2, o.H2, o.DH), {{"D2", o.D2}, {"H2", o.H2}, {"DH", o.DH}});
    };
  });

  auto* ht = bound->add_subcommand("hodge-threefold", "(D^2.H)(H^3) <= (D.H^2)^2");
  ht->add_option("--D2H", o.D2H)->required();
  ht->add_option("--H3", o.H3)->required();
  ht->add_option("--DH2", o.DH2)->required();
  json_flag(ht);
  ht->callback([&] {
    action = [&] {
      print_bool(out, o, "hodge_threefold", hodge_threefold_check(o.D2H, o.H3, o.DH2),
                 {{"D2H", o.D2H}, {"H3", o.H3}, {"DH2", o.DH2}});
    };
  });

  auto* ld = bound->add_subcommand("leaf-degree", "4 deg_l^2");
  ld->add_option("--deg-l", o.deg_l)->required();
  json_flag(ld);
  ld->callback([&] {
    action = [&] {
      const auto v = leaf_degree_bound(o.deg_l);
      if (o.as_json) {
        out << json{{"statement", "leaf_degree"}, {"deg_l", o.deg_l}, {"value", v}}.dump(2) << '\n';
      } else {
        out << "leaf degree <= " << v << '\n';
      }
    };
  });

  auto* h0 = bound->add_subcommand("h0", "((d+1)(d+2)/2, d(d+3)/2)");
  h0->add_option("--d", o.d)->required();
  json_flag(h0);
  h0->callback([&] {
    action = [&] {
      const auto [sections, N] = h0_and_embedding_bounds(o.d);
      if (o.as_json) {
        out << json{{"statement", "h0_embedding"}, {"d", o.d}, {"h0", sections}, {"N", N}}.dump(2) << '\n';
      } else {
        out << "h0 <= " << sections << "\nN <= " << N << '\n';
      }
    };
  });

  // closure
  auto* closure = app.add_subcommand("closure", "Stable closures on finite incidence models");
  closure->require_subcommand(1);
  auto with_model = [&](CLI::App* c, bool need_x, bool need_y,
                        std::function<void(const IncidenceModel&, const Options&, std::ostream&)> fn) {
    c->add_option("--model", o.model, "Model JSON (QL_FIXTURES resolves bare names)")->required();
    if (need_x) c->add_option("--x", o.x, "Basepoint")->required();
    if (need_y) c->add_option("--y", o.y, "Seed point")->required();
    json_flag(c);
    c->callback([&, fn] {
      action = [&, fn] {
        const IncidenceModel model = io::load_model(resolve_model(o.model));
        fn(model, o, out);
      };
    });
  };
  with_model(closure->add_subcommand("lines", "Lines through x"), true, false, closure_lines);
  with_model(closure->add_subcommand("run", "Minimal stable set through y for basepoint x"), true, true, closure_run);
  with_model(closure->add_subcommand("e", "Lines through both x and y"), true, true, closure_e);
  with_model(closure->add_subcommand("dist", "Histogram of e over all pairs"), false, false, closure_dist);
  with_model(closure->add_subcommand("assumption", "Pairs with F(x,y) != F(y,x)"), false, false, closure_assumption);
  with_model(closure->add_subcommand("partition", "Leaves at basepoint x"), true, false, closure_partition);
  with_model(closure->add_subcommand("quotient", "Collapse leaves at x and report e"), true, false, closure_quotient);

  std::vector<std::string> argv_store{"qlines"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace qlines::cli
