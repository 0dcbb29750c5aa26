#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace qlines {

/// Subset of a model's points, indexed in model order.
using PointSet = boost::dynamic_bitset<>;

/// A finite point set with a family of "lines" (subsets with at least two
/// points), standing in for a variety together with a family of quasi-lines.
/// Immutable after construction.
///
/// Finite models have no general points: statements about general x, y
/// become statements about every pair, which adversarial models may violate.
class IncidenceModel {
 public:
  /// Validates eagerly: unique non-empty point ids, every line of size >= 2
  /// without repeated or unknown ids, no duplicate lines. Throws ModelError
  /// naming the offending line or point.
  IncidenceModel(std::vector<std::string> points, std::vector<std::vector<std::string>> lines);

  const std::vector<std::string>& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }
  const PointSet& line(std::size_t i) const { return lines_.at(i); }
  const std::vector<PointSet>& lines() const noexcept { return lines_; }

  /// Throws ModelError("unknown point ...").
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_.contains(std::string(name)); }

  std::vector<std::string> names(const PointSet& set) const;
  PointSet make_set(std::span<const std::string> names) const;
  std::vector<std::vector<std::string>> line_names() const;

  /// Copy with one extra line appended.
  IncidenceModel with_line(std::vector<std::string> line) const;

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointSet> lines_;
};

/// Indices of the lines containing x, ascending.
std::vector<std::size_t> lines_through(const IncidenceModel& m, std::string_view x);

struct ClosureResult {
  std::string basepoint;
  std::string seed;
  PointSet leaf;
  /// V_0 = {seed} strictly increasing up to V_k = leaf; the repeated
  /// V_{k+1} = V_k that ends the iteration is not stored.
  std::vector<PointSet> chain;
  bool stable = false;
  /// No line contains both basepoint and seed; the leaf is then {seed}.
  bool no_line = false;
};

/// V is stable for basepoint x when every line through x that meets V \ {x}
/// is contained in V.
bool is_stable(const IncidenceModel& m, std::string_view x, const PointSet& v);

/// Minimal stable set for basepoint x containing y, computed by the fixpoint
///   V_0 = {y},  V_i = V_{i-1} u U{ L through x : L meets V_{i-1} \ {x} }.
/// Absorbing every qualifying line per step reaches the same minimal set as
/// growing one component at a time, independent of line order. Throws
/// ModelError for x == y or unknown ids.
ClosureResult stable_closure(const IncidenceModel& m, std::string_view x, std::string_view y);

/// Number of lines containing both x and y.
int e_invariant(const IncidenceModel& m, std::string_view x, std::string_view y);

/// e-value -> number of unordered pairs with that value. Needs >= 2 points.
std::map<int, std::size_t> e_distribution(const IncidenceModel& m);

/// Unordered pairs {x, y} on a common line whose two closures differ, each
/// listed once as (earlier, later) in model order. Empty means the symmetric
/// case F_{x,y} = F_{y,x} holds for every joined pair.
std::vector<std::pair<std::string, std::string>> assumption_check(const IncidenceModel& m);

struct Leaf {
  PointSet points;
  std::vector<std::string> seeds;  // the y != x whose closure is this leaf
  bool no_line = false;
};

struct LeafPartition {
  std::string basepoint;
  std::vector<Leaf> leaves;  // ordered by first seed in model order
  /// Leaf index pairs (i < j) sharing a point other than the basepoint.
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
};

LeafPartition leaf_partition(const IncidenceModel& m, std::string_view x);

struct QuotientReport {
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::optional<IncidenceModel> quotient;
  /// For each quotient line, how many model lines map onto it.
  std::vector<std::size_t> line_multiplicity;
  std::map<int, std::size_t> distribution;
  bool e_at_most_one = false;
};

/// Collapses each leaf at x to a point; a line's image is the set of leaves
/// meeting it away from x, kept when it has at least two points. Reports
/// whether the quotient has e <= 1 everywhere. Only a heuristic probe;
/// returns applicable = false (no exception) unless the model is symmetric
/// and has at least two leaves at x meeting only in x.
QuotientReport quotient_e_check(const IncidenceModel& m, std::string_view x);

}  // namespace qlines
