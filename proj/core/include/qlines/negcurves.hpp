#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlines/lattice.hpp"

namespace qlines {

enum class Family { Exceptional, Line, Conic, Higher };

std::string_view to_string(Family f);
/// Accepts "exceptional", "line", "conic", "higher" (case-sensitive).
std::optional<Family> parse_family(std::string_view name);

/// A numerical (-1)-class: C^2 = -1 and C.K = -1.
///
/// For n <= 8 and points in general position every such class is represented
/// by an irreducible smooth rational curve. That is a classical fact this
/// library assumes; effectivity is never checked.
struct NegCurve {
  DivisorClass cls;
  Family family;

  friend bool operator==(const NegCurve&, const NegCurve&) = default;
};

/// Shape-based tag: E_i, H-E_i-E_j, 2H minus five distinct E_i, else Higher.
Family classify(const DivisorClass& cls);

/// Validates the (-1) invariants and returns the tagged curve. Throws
/// InvalidCurve otherwise.
NegCurve make_neg_curve(const SurfaceModel& s, const DivisorClass& cls);

/// Coefficient box searched by enumerate_minus_one for surface s.
struct SearchBox {
  std::int64_t h_min;
  std::int64_t h_max;
  std::int64_t e_abs_max;
};
SearchBox minus_one_search_box(const SurfaceModel& s);

/// All (-1)-classes on s in canonical order: by h, then lexicographically on
/// (-|e_1|, ..., -|e_n|). The order agrees with family order, and puts E_1
/// first and H-E_1-E_2 before H-E_1-E_3.
std::vector<NegCurve> enumerate_minus_one(const SurfaceModel& s);

/// Canonical comparison used by enumerate_minus_one.
bool canonical_less(const DivisorClass& a, const DivisorClass& b);

/// Keeps only curves of the given family, preserving order.
std::vector<NegCurve> filter_family(std::span<const NegCurve> curves, Family f);

/// Meet graph: an edge joins two distinct curves iff they intersect
/// positively. Pairwise intersections of distinct (-1)-classes are >= 0 for
/// n <= 8; construction checks this rather than assuming it.
class CurveGraph {
 public:
  CurveGraph(std::vector<NegCurve> curves, std::vector<std::vector<std::int64_t>> intersections);

  const std::vector<NegCurve>& curves() const noexcept { return curves_; }
  std::size_t size() const noexcept { return curves_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_.at(i).at(j); }
  std::int64_t intersection(std::size_t i, std::size_t j) const { return intersections_.at(i).at(j); }
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  /// Edges as (i, j) with i < j, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Common degree, or nullopt if the graph is not regular.
  std::optional<std::size_t> regular_degree() const;
  /// Length of a shortest cycle; nullopt for a forest.
  std::optional<std::size_t> girth() const;

 private:
  std::vector<NegCurve> curves_;
  std::vector<std::vector<std::int64_t>> intersections_;
  std::vector<std::vector<bool>> adjacency_;
};

/// Throws InvalidCurve if any curve fails the (-1) invariants on s, or if two
/// distinct curves intersect negatively.
CurveGraph meet_graph(const SurfaceModel& s, std::vector<NegCurve> curves);

/// A k-subset of graph vertices, indices ascending.
using Configuration = std::vector<std::size_t>;

/// All independent sets of size k, each sorted ascending, the list sorted
/// lexicographically. Backtracking over vertices ordered by decreasing degree
/// (ties by index).
std::vector<Configuration> independent_sets(const CurveGraph& g, std::size_t k);

struct ConfigurationSet {
  CurveGraph graph;
  std::vector<Configuration> configurations;
};

/// k-subsets of pairwise disjoint (-1)-curves on s. Requires 1 <= k <= n.
ConfigurationSet disjoint_configurations(const SurfaceModel& s, int k);

/// Same, restricted to the curves of one family (e.g. the ten lines on the
/// quintic del Pezzo surface, whose meet graph is the Petersen graph).
ConfigurationSet disjoint_configurations(const SurfaceModel& s, int k, std::optional<Family> only);

/// Category of a configuration: "conic" if it contains a conic class,
/// otherwise by number of exceptional curves ("no_exceptional",
/// "one_exceptional", ..., "all_exceptional" when every member is an E_i).
std::string configuration_category(const CurveGraph& g, const Configuration& c);

/// Category -> count over a configuration list.
std::map<std::string, std::size_t> configuration_breakdown(const ConfigurationSet& set);

/// Number of blow-down configurations, i.e. of n pairwise disjoint
/// (-1)-curves; 1 for n = 0 (the plane itself).
///
/// For n = 5 this counts the families of quasi-lines on the quintic del Pezzo
/// surface and bounds e(X,l) by 16. For other n the count is still the number
/// of ways to present the surface as a blow-up of P^2, but its identification
/// with quasi-line families is not established here.
std::size_t quasiline_family_count(const SurfaceModel& s);

}  // namespace qlines
