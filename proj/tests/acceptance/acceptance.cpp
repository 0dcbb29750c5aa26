// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. argv[1] is the census written by minus_one_census.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chow_literal.hpp"
#include "minus_one_oracle.hpp"
#include "qlines/bigmath.hpp"
#include "qlines/bounds.hpp"
#include "qlines/closure.hpp"
#include "qlines/negcurves.hpp"
#include "qlines/serialize.hpp"
#include "random_models.hpp"
#include "stable_set_oracle.hpp"

namespace {

using namespace qlines;
using nlohmann::json;

std::filesystem::path g_census;
const std::filesystem::path kFixtures{QLINES_FIXTURE_DIR};

// Each check appends a reason for every mismatch it finds; an empty list passes.
struct Failures {
  std::vector<std::string> items;
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      items.push_back(os.str());
    }
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

std::string pairs_string(const std::vector<std::pair<std::string, std::string>>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " (" : "(") + v[i].first + "," + v[i].second + ")";
  return s + "]";
}

std::map<Family, std::size_t> family_counts(const std::vector<NegCurve>& curves) {
  std::map<Family, std::size_t> m;
  for (const auto& c : curves) ++m[c.family];
  return m;
}

void census_n5(Failures& f) {
  const auto curves = enumerate_minus_one(SurfaceModel(5));
  auto fam = family_counts(curves);
  f.expect_eq(curves.size(), 16u, "classes");
  f.expect_eq(fam[Family::Exceptional], 5u, "exceptional");
  f.expect_eq(fam[Family::Line], 10u, "line");
  f.expect_eq(fam[Family::Conic], 1u, "conic");
  f.expect_eq(fam[Family::Higher], 0u, "higher");
}

void petersen(Failures& f) {
  const SurfaceModel s(5);
  const auto g = meet_graph(s, filter_family(enumerate_minus_one(s), Family::Line));
  f.expect_eq(g.size(), 10u, "vertices");
  f.expect_eq(g.edge_count(), 15u, "edges");
  f.expect_eq(g.regular_degree().value_or(0), 3u, "regular degree");
  f.expect_eq(g.girth().value_or(0), 5u, "girth");
  f.expect_eq(independent_sets(g, 4).size(), 5u, "independent 4-sets");
}

void configurations_n5(Failures& f) {
  const SurfaceModel s(5);
  const auto set = disjoint_configurations(s, 5);
  auto b = configuration_breakdown(set);
  f.expect_eq(set.configurations.size(), 16u, "configurations");
  f.expect_eq(b["conic"], 5u, "conic");
  f.expect_eq(b["two_exceptional"], 10u, "two_exceptional");
  f.expect_eq(b["all_exceptional"], 1u, "all_exceptional");
  f.expect_eq(quasiline_family_count(s), 16u, "quasiline_family_count");
}

void chow_examples(Failures& f) {
  auto check = [&f](const BoundReport& r, const BigInt& want, const std::string& tag) {
    f.expect(r.is_integer(), tag + ": not an integer");
    f.expect(BigInt(numerator(r.value)) == want, tag + ": value mismatch");
    const auto digits = decimal_digits(want);
    f.expect_eq(r.digits(), digits, tag + " digits");
    // digits = floor(log10) + 1 must be consistent with the log10 field.
    f.expect_eq(static_cast<std::size_t>(std::floor(r.log10 + 1e-6)) + 1, digits, tag + " floor(log10)+1");
    const double exact = std::log10(static_cast<double>(want >> (msb(want) - 52))) +
                         static_cast<double>(msb(want) - 52) * std::log10(2.0);
    f.expect(std::abs(r.log10 - exact) < 1e-6, tag + ": log10 off by more than 1e-6");
  };
  const BigInt b60_9 = oracle::pascal_binomial(60, 9);
  check(chow_component_bound(3, 6), boost::multiprecision::pow(b60_9, 90), "binom(60,9)^90");
  f.expect_eq(oracle::pascal_binomial(20, 4), BigInt(4845), "binom(20,4)");
  check(chow_component_bound(3, 4, 5), boost::multiprecision::pow(BigInt(4845), 45), "4845^45");
}

void formula_identities(Failures& f) {
  for (std::int64_t d = 1; d <= 6; ++d) {
    for (std::int64_t h2 : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12}) {
      const auto r = chow_component_bound(d, h2);
      f.expect(BigInt(numerator(r.value)) == oracle::literal_chow_bound(d, h2) && denominator(r.value) == 1,
               "chow d=" + std::to_string(d) + " H2=" + std::to_string(h2));
    }
  }
  for (std::int64_t l = 1; l <= 12; ++l) {
    for (std::int64_t x = 1; x <= 12; ++x) {
      const BigRational lhs = dichotomy_bound(l, x).value * BigRational(l);
      const BigInt ld = leaf_degree_bound(l);
      const BigRational rhs(ld * ld, BigInt(x));
      f.expect(lhs == rhs, "dichotomy identity deg_l=" + std::to_string(l) + " deg_X=" + std::to_string(x));
    }
  }
}

// Smallest d0 >= 2 violating d*sing < d(rank-1) + (d-1)(n-rank), scanned
// over a fixed window in rationals rather than the closed form.
int scan_leaf_bound(int n, int rank, int sing) {
  for (int d = 2; d <= 1000; ++d) {
    if (static_cast<long>(d) * sing < static_cast<long>(d) * (rank - 1) + static_cast<long>(d - 1) * (n - rank)) {
      return d - 1;
    }
  }
  return -1;
}

void leaf_section(Failures& f) {
  for (int n = 2; n <= 10; ++n) {
    for (int rank = 1; rank < n; ++rank) {
      const int sing = rank - 1;
      if (sing > n - 2) continue;
      f.expect_eq(leaf_section_bound(FoliationProfile(n, rank, sing)), 1,
                  "n=" + std::to_string(n) + " rank=" + std::to_string(rank));
    }
  }
  f.expect_eq(leaf_section_bound(FoliationProfile(5, 2, 3)), 3, "(5,2,3)");
  f.expect_eq(scan_leaf_bound(5, 2, 3), 3, "(5,2,3) scan oracle");
}

void curve_counts(Failures& f) {
  const std::vector<std::size_t> frozen{0, 1, 3, 6, 10, 16, 27, 56, 240};
  std::ifstream in(g_census);
  if (!in) {
    f.expect(false, "census file '" + g_census.string() + "' missing (run the minus_one_census test first)");
    return;
  }
  const json census = json::parse(in);
  for (int n = 0; n <= 8; ++n) {
    const auto tag = "n=" + std::to_string(n);
    const auto impl = enumerate_minus_one(SurfaceModel(n));
    f.expect_eq(impl.size(), frozen[static_cast<std::size_t>(n)], tag + " implementation");
    f.expect_eq(census["counts"][n].get<std::size_t>(), frozen[static_cast<std::size_t>(n)], tag + " census");
    std::vector<std::vector<std::int64_t>> got;
    for (const auto& c : impl) got.push_back(c.cls.coefficients());
    auto want = census["classes"][std::to_string(n)].get<std::vector<std::vector<std::int64_t>>>();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    f.expect(got == want, tag + ": class sets differ from census");
  }
  f.expect(census["seconds"].get<double>() < 60.0, "census exceeded 60 s");
}

oracle::RawModel raw_of(const IncidenceModel& m) {
  oracle::RawModel raw;
  raw.points = static_cast<int>(m.point_count());
  for (const auto& l : m.lines()) {
    std::set<int> line;
    for (auto i = l.find_first(); i != PointSet::npos; i = l.find_next(i)) line.insert(static_cast<int>(i));
    raw.lines.push_back(line);
  }
  return raw;
}

void closure_corpus(Failures& f) {
  std::vector<IncidenceModel> corpus;
  for (const char* name : {"fano", "bowtie", "proper-leaf", "asymmetric", "product"}) {
    corpus.push_back(io::load_model(kFixtures / (std::string(name) + ".json")));
  }
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) corpus.push_back(testing::random_model(rng, 10, 15).model());

  std::size_t checked = 0;
  for (std::size_t mi = 0; mi < corpus.size(); ++mi) {
    const auto& m = corpus[mi];
    const auto raw = raw_of(m);
    const auto tag = "model " + std::to_string(mi);
    auto shuffled_lines = m.line_names();
    for (auto& l : shuffled_lines) std::shuffle(l.begin(), l.end(), rng);
    std::shuffle(shuffled_lines.begin(), shuffled_lines.end(), rng);
    const IncidenceModel shuffled(m.points(), shuffled_lines);

    const auto& pts = m.points();
    std::vector<std::string> extra = pts;
    std::shuffle(extra.begin(), extra.end(), rng);
    extra.resize(std::min<std::size_t>(pts.size(), 3));
    std::sort(extra.begin(), extra.end());
    bool fresh = true;
    for (auto l : m.line_names()) {
      std::sort(l.begin(), l.end());
      fresh = fresh && l != extra;
    }
    const std::optional<IncidenceModel> bigger = fresh ? std::optional(m.with_line(extra)) : std::nullopt;

    for (std::size_t x = 0; x < pts.size(); ++x) {
      for (std::size_t y = 0; y < pts.size(); ++y) {
        if (x == y) continue;
        const auto leaf = stable_closure(m, pts[x], pts[y]).leaf;
        const auto want = oracle::brute_force_minimal_stable(raw, static_cast<int>(x), static_cast<int>(y));
        f.expect(leaf.to_ulong() == want, tag + ": leaf differs from oracle at (" + pts[x] + "," + pts[y] + ")");
        for (const auto& z : m.names(leaf)) {
          if (z != pts[x]) f.expect(stable_closure(m, pts[x], z).leaf == leaf, tag + ": not idempotent");
        }
        f.expect(stable_closure(shuffled, pts[x], pts[y]).leaf == leaf, tag + ": depends on line order");
        if (bigger) {
          f.expect(leaf.is_subset_of(stable_closure(*bigger, pts[x], pts[y]).leaf), tag + ": not monotone");
        }
        ++checked;
      }
    }
  }
  f.expect(checked > 0, "no pairs checked");
}

void dichotomy_witnesses(Failures& f) {
  f.expect_eq(pairs_string(assumption_check(io::load_model(kFixtures / "fano.json"))), std::string("[]"), "fano");
  f.expect_eq(pairs_string(assumption_check(io::load_model(kFixtures / "bowtie.json"))), std::string("[]"), "bowtie");
  std::ifstream in(kFixtures / "asymmetric.expected.json");
  const json sidecar = json::parse(in);
  std::vector<std::pair<std::string, std::string>> want;
  for (const auto& p : sidecar["assumption_violations"]) want.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  f.expect_eq(pairs_string(assumption_check(io::load_model(kFixtures / "asymmetric.json"))), pairs_string(want),
              "asymmetric");
}

void signature_property(Failures& f) {
  std::mt19937_64 rng(8128);
  std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
  for (int n = 1; n <= 8; ++n) {
    const SurfaceModel s(n);
    const auto K = canonical_class(s);
    const std::int64_t k2 = 9 - n;
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(n));
      for (auto& x : e) x = coeff(rng);
      const DivisorClass D(coeff(rng), e);
      const std::int64_t dk = intersect(s, D, K);
      const std::int64_t d2 = self_intersection(s, D);
      if (!(dk * dk >= d2 * k2) || !satisfies_hodge_index(s, D)) ++bad;
    }
    f.expect_eq(bad, 0u, "violations at n=" + std::to_string(n));
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Failures&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  g_census = argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path("minus_one_census.json");
  const std::vector<Criterion> criteria{
      {1, "(-1)-curve census n=5: 16 = 5 + 10 + 1", 1, census_n5},
      {2, "Petersen meet graph of the 10 lines", 1, petersen},
      {3, "disjoint configurations n=5: 16 = 5 + 10 + 1", 1, configurations_n5},
      {4, "Chow bounds binom(60,9)^90 and 4845^45", 1, chow_examples},
      {5, "Chow and dichotomy formula identities", 1, formula_identities},
      {6, "leaf section evaluator", 1, leaf_section},
      {7, "(-1)-curve counts n=0..8 vs census", 60, curve_counts},
      {8, "closure oracle equivalence and properties", 30, closure_corpus},
      {9, "dichotomy witnesses on fano, bowtie, asymmetric", 1, dichotomy_witnesses},
      {10, "lattice signature property", 5, signature_property},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_seconds << " s";
      f.items.push_back(os.str());
    }
    const bool ok = f.items.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %-52s %8.3f s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs);
    for (const auto& why : f.items) std::printf("          - %s\n", why.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
