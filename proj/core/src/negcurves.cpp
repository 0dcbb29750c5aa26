#include "qlines/negcurves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "qlines/errors.hpp"

namespace qlines {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Exceptional: return "exceptional";
    case Family::Line: return "line";
    case Family::Conic: return "conic";
    case Family::Higher: return "higher";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Exceptional, Family::Line, Family::Conic, Family::Higher}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

// True iff e has `count` entries equal to `value` and zeros elsewhere.
bool is_pattern(std::span<const std::int64_t> e, std::int64_t value, int count) {
  int hits = 0;
  for (auto c : e) {
    if (c == value) {
      ++hits;
    } else if (c != 0) {
      return false;
    }
  }
  return hits == count;
}

}  // namespace

Family classify(const DivisorClass& cls) {
  if (cls.h() == 0 && is_pattern(cls.e(), 1, 1)) return Family::Exceptional;
  if (cls.h() == 1 && is_pattern(cls.e(), -1, 2)) return Family::Line;
  if (cls.h() == 2 && is_pattern(cls.e(), -1, 5)) return Family::Conic;
  return Family::Higher;
}

NegCurve make_neg_curve(const SurfaceModel& s, const DivisorClass& cls) {
  const auto k = canonical_class(s);
  if (self_intersection(s, cls) != -1 || intersect(s, cls, k) != -1) {
    throw InvalidCurve("class " + cls.to_string() + " is not a (-1)-class (need C^2 = C.K = -1)");
  }
  return NegCurve{cls, classify(cls)};
}

// A (-1)-class satisfies
//   C.K = -3h - sum e_i = -1   =>  sum e_i   = 1 - 3h
//   C^2 = h^2 - sum e_i^2 = -1 =>  sum e_i^2 = h^2 + 1.
// Cauchy-Schwarz, (sum e_i)^2 <= n * sum e_i^2, gives
//   (3h - 1)^2 <= n (h^2 + 1)  <=>  (9 - n) h^2 - 6h + (1 - n) <= 0,
// a bounded interval in h because 9 - n > 0 for n <= 8 (for n = 8: -1 <= h <= 7).
// Each |e_i| <= sqrt(h^2 + 1) <= sqrt(h_max^2 + 1), i.e. at most 7.
SearchBox minus_one_search_box(const SurfaceModel& s) {
  const std::int64_t n = s.n();
  auto admissible = [n](std::int64_t h) { return (9 - n) * h * h - 6 * h + (1 - n) <= 0; };
  SearchBox box{1, 0, 0};  // empty
  bool found = false;
  // The interval lies within [-2, 8] for every n <= 8; scanning wider is harmless.
  for (std::int64_t h = -16; h <= 16; ++h) {
    if (!admissible(h)) continue;
    if (!found) box.h_min = h;
    box.h_max = h;
    found = true;
  }
  if (found) {
    const std::int64_t hm = std::max(std::abs(box.h_min), std::abs(box.h_max));
    box.e_abs_max = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(hm * hm + 1))));
  }
  return box;
}

bool canonical_less(const DivisorClass& a, const DivisorClass& b) {
  if (a.h() != b.h()) return a.h() < b.h();
  auto ae = a.e();
  auto be = b.e();
  for (std::size_t i = 0; i < std::min(ae.size(), be.size()); ++i) {
    const auto ka = -std::abs(ae[i]);
    const auto kb = -std::abs(be[i]);
    if (ka != kb) return ka < kb;
  }
  return a < b;
}

std::vector<NegCurve> enumerate_minus_one(const SurfaceModel& s) {
  const int n = s.n();
  const SearchBox box = minus_one_search_box(s);
  std::vector<NegCurve> out;
  std::vector<std::int64_t> e(static_cast<std::size_t>(n));

  // Fill e[pos..n) so that the remaining coordinates sum to `sum` with
  // squares summing to `sq`.
  std::function<void(std::int64_t, int, std::int64_t, std::int64_t)> fill =
      [&](std::int64_t h, int pos, std::int64_t sum, std::int64_t sq) {
        const int left = n - pos;
        if (left == 0) {
          if (sum == 0 && sq == 0) out.push_back(make_neg_curve(s, DivisorClass(h, e)));
          return;
        }
        if (sq < 0 || sum * sum > left * sq) return;
        for (std::int64_t v = -box.e_abs_max; v <= box.e_abs_max; ++v) {
          if (v * v > sq) continue;
          e[static_cast<std::size_t>(pos)] = v;
          fill(h, pos + 1, sum - v, sq - v * v);
        }
      };

  for (std::int64_t h = box.h_min; h <= box.h_max; ++h) fill(h, 0, 1 - 3 * h, h * h + 1);

  std::sort(out.begin(), out.end(),
            [](const NegCurve& a, const NegCurve& b) { return canonical_less(a.cls, b.cls); });
  return out;
}

std::vector<NegCurve> filter_family(std::span<const NegCurve> curves, Family f) {
  std::vector<NegCurve> out;
  std::copy_if(curves.begin(), curves.end(), std::back_inserter(out),
               [f](const NegCurve& c) { return c.family == f; });
  return out;
}

CurveGraph::CurveGraph(std::vector<NegCurve> curves, std::vector<std::vector<std::int64_t>> intersections)
    : curves_(std::move(curves)), intersections_(std::move(intersections)) {
  const std::size_t m = curves_.size();
  if (intersections_.size() != m) throw DimensionMismatch("intersection matrix size differs from curve count");
  adjacency_.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    if (intersections_[i].size() != m) throw DimensionMismatch("intersection matrix is not square");
    for (std::size_t j = 0; j < m; ++j) adjacency_[i][j] = i != j && intersections_[i][j] >= 1;
  }
}

std::size_t CurveGraph::degree(std::size_t i) const {
  const auto& row = adjacency_.at(i);
  return static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
}

std::size_t CurveGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < size(); ++i) twice += degree(i);
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> CurveGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacency_[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::size_t> CurveGraph::regular_degree() const {
  if (curves_.empty()) return 0;
  const std::size_t d = degree(0);
  for (std::size_t i = 1; i < size(); ++i) {
    if (degree(i) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::size_t> CurveGraph::girth() const {
  // BFS from every vertex; a non-tree edge (u, w) closes a cycle of length
  // dist[u] + dist[w] + 1, and the minimum over all roots is the girth.
  std::optional<std::size_t> best;
  const std::size_t m = size();
  for (std::size_t root = 0; root < m; ++root) {
    std::vector<std::size_t> dist(m, SIZE_MAX), parent(m, SIZE_MAX);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < m; ++w) {
        if (!adjacency_[u][w]) continue;
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

CurveGraph meet_graph(const SurfaceModel& s, std::vector<NegCurve> curves) {
  for (auto& c : curves) c = make_neg_curve(s, c.cls);
  const std::size_t m = curves.size();
  std::vector<std::vector<std::int64_t>> dots(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto v = intersect(s, curves[i].cls, curves[j].cls);
      if (i != j && v < 0) {
        throw InvalidCurve("distinct (-1)-classes " + curves[i].cls.to_string() + " and " +
                           curves[j].cls.to_string() + " intersect negatively");
      }
      dots[i][j] = dots[j][i] = v;
    }
  }
  return CurveGraph(std::move(curves), std::move(dots));
}

std::vector<Configuration> independent_sets(const CurveGraph& g, std::size_t k) {
  const std::size_t m = g.size();
  std::vector<Configuration> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (k > m) return out;

  // Fixed search order: decreasing degree, then index.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

  // Non-neighbour masks in search-order positions.
  std::vector<boost::dynamic_bitset<>> compatible(m, boost::dynamic_bitset<>(m));
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) compatible[p][q] = p != q && !g.adjacent(order[p], order[q]);
  }

  Configuration chosen;
  chosen.reserve(k);
  // `candidates` holds the positions still eligible: later than every chosen
  // position and non-adjacent to all of them.
  std::function<void(const boost::dynamic_bitset<>&)> extend = [&](const boost::dynamic_bitset<>& candidates) {
    if (chosen.size() == k) {
      Configuration c;
      c.reserve(k);
      for (auto p : chosen) c.push_back(order[p]);
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    for (auto p = candidates.find_first(); p != boost::dynamic_bitset<>::npos; p = candidates.find_next(p)) {
      boost::dynamic_bitset<> rest = candidates & compatible[p];
      rest.reset(0, p + 1);
      if (rest.count() + chosen.size() + 1 < k) continue;
      chosen.push_back(p);
      extend(rest);
      chosen.pop_back();
    }
  };

  boost::dynamic_bitset<> all(m);
  all.set();
  extend(all);

  std::sort(out.begin(), out.end());
  return out;
}

ConfigurationSet disjoint_configurations(const SurfaceModel& s, int k) { return disjoint_configurations(s, k, std::nullopt); }

ConfigurationSet disjoint_configurations(const SurfaceModel& s, int k, std::optional<Family> only) {
  if (k < 1 || k > s.n()) {
    throw DomainError("configuration size k must lie in 1..n=" + std::to_string(s.n()) + ", got " +
                      std::to_string(k));
  }
  auto curves = enumerate_minus_one(s);
  if (only) curves = filter_family(curves, *only);
  CurveGraph graph = meet_graph(s, std::move(curves));
  auto configs = independent_sets(graph, static_cast<std::size_t>(k));
  return ConfigurationSet{std::move(graph), std::move(configs)};
}

std::string configuration_category(const CurveGraph& g, const Configuration& c) {
  static constexpr std::array<const char*, 9> kWords = {"no",   "one", "two",   "three", "four",
                                                        "five", "six", "seven", "eight"};
  std::size_t exceptional = 0;
  for (auto i : c) {
    const Family f = g.curves().at(i).family;
    if (f == Family::Conic) return "conic";
    if (f == Family::Exceptional) ++exceptional;
  }
  if (exceptional == c.size() && !c.empty()) return "all_exceptional";
  return std::string(kWords.at(exceptional)) + "_exceptional";
}

std::map<std::string, std::size_t> configuration_breakdown(const ConfigurationSet& set) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : set.configurations) ++out[configuration_category(set.graph, c)];
  return out;
}

std::size_t quasiline_family_count(const SurfaceModel& s) {
  if (s.n() == 0) return 1;
  return disjoint_configurations(s, s.n()).configurations.size();
}

}  // namespace qlines
