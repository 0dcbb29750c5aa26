#include "qlines/closure.hpp"

#include <algorithm>
#include <set>

#include "qlines/errors.hpp"

namespace qlines {

IncidenceModel::IncidenceModel(std::vector<std::string> points, std::vector<std::vector<std::string>> lines)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].empty()) throw ModelError("point " + std::to_string(i) + ": empty id");
    if (!index_.emplace(points_[i], i).second) throw ModelError("duplicate point id '" + points_[i] + "'");
  }
  lines_.reserve(lines.size());
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string where = "line " + std::to_string(li);
    if (lines[li].size() < 2) throw ModelError(where + ": a line needs at least two points");
    PointSet set(points_.size());
    for (const auto& name : lines[li]) {
      auto it = index_.find(name);
      if (it == index_.end()) throw ModelError(where + ": unknown point '" + name + "'");
      if (set[it->second]) throw ModelError(where + ": point '" + name + "' listed twice");
      set.set(it->second);
    }
    for (std::size_t prev = 0; prev < lines_.size(); ++prev) {
      if (lines_[prev] == set) throw ModelError(where + ": duplicate of line " + std::to_string(prev));
    }
    lines_.push_back(std::move(set));
  }
}

std::size_t IncidenceModel::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ModelError("unknown point '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> IncidenceModel::names(const PointSet& set) const {
  std::vector<std::string> out;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) out.push_back(points_.at(i));
  return out;
}

PointSet IncidenceModel::make_set(std::span<const std::string> names) const {
  PointSet set(points_.size());
  for (const auto& n : names) set.set(index_of(n));
  return set;
}

std::vector<std::vector<std::string>> IncidenceModel::line_names() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(lines_.size());
  for (const auto& l : lines_) out.push_back(names(l));
  return out;
}

IncidenceModel IncidenceModel::with_line(std::vector<std::string> line) const {
  auto ls = line_names();
  ls.push_back(std::move(line));
  return IncidenceModel(points_, std::move(ls));
}

namespace {

struct Closure {
  PointSet leaf;
  std::vector<PointSet> chain;
};

Closure close(const IncidenceModel& m, std::size_t x, std::size_t y) {
  std::vector<const PointSet*> pencil;
  for (const auto& l : m.lines()) {
    if (l[x]) pencil.push_back(&l);
  }
  PointSet v(m.point_count());
  v.set(y);
  Closure c;
  c.chain.push_back(v);
  for (;;) {
    PointSet away = v;
    away.reset(x);
    PointSet next = v;
    for (const PointSet* l : pencil) {
      if (l->intersects(away)) next |= *l;
    }
    if (next == v) break;
    v = std::move(next);
    c.chain.push_back(v);
  }
  c.leaf = std::move(v);
  return c;
}

int common_lines(const IncidenceModel& m, std::size_t x, std::size_t y) {
  return static_cast<int>(std::count_if(m.lines().begin(), m.lines().end(),
                                        [&](const PointSet& l) { return l[x] && l[y]; }));
}

std::map<int, std::size_t> distribution_of(const IncidenceModel& m) {
  if (m.point_count() < 2) throw ModelError("e distribution needs at least two points");
  std::map<int, std::size_t> hist;
  for (std::size_t i = 0; i < m.point_count(); ++i) {
    for (std::size_t j = i + 1; j < m.point_count(); ++j) ++hist[common_lines(m, i, j)];
  }
  return hist;
}

}  // namespace

std::vector<std::size_t> lines_through(const IncidenceModel& m, std::string_view x) {
  const std::size_t xi = m.index_of(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.line_count(); ++i) {
    if (m.line(i)[xi]) out.push_back(i);
  }
  return out;
}

bool is_stable(const IncidenceModel& m, std::string_view x, const PointSet& v) {
  const std::size_t xi = m.index_of(x);
  PointSet away = v;
  away.reset(xi);
  return std::all_of(m.lines().begin(), m.lines().end(), [&](const PointSet& l) {
    return !l[xi] || !l.intersects(away) || l.is_subset_of(v);
  });
}

ClosureResult stable_closure(const IncidenceModel& m, std::string_view x, std::string_view y) {
  const std::size_t xi = m.index_of(x);
  const std::size_t yi = m.index_of(y);
  if (xi == yi) throw ModelError("closure needs distinct basepoint and seed, got '" + std::string(x) + "' twice");
  Closure c = close(m, xi, yi);
  ClosureResult r;
  r.basepoint = std::string(x);
  r.seed = std::string(y);
  r.leaf = std::move(c.leaf);
  r.chain = std::move(c.chain);
  r.stable = true;
  r.no_line = common_lines(m, xi, yi) == 0;
  return r;
}

int e_invariant(const IncidenceModel& m, std::string_view x, std::string_view y) {
  const std::size_t xi = m.index_of(x);
  const std::size_t yi = m.index_of(y);
  if (xi == yi) throw ModelError("e invariant needs two distinct points");
  return common_lines(m, xi, yi);
}

std::map<int, std::size_t> e_distribution(const IncidenceModel& m) { return distribution_of(m); }

std::vector<std::pair<std::string, std::string>> assumption_check(const IncidenceModel& m) {
  if (m.point_count() < 2) throw ModelError("assumption check needs at least two points");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < m.point_count(); ++i) {
    for (std::size_t j = i + 1; j < m.point_count(); ++j) {
      if (common_lines(m, i, j) == 0) continue;
      if (close(m, i, j).leaf != close(m, j, i).leaf) out.emplace_back(m.points()[i], m.points()[j]);
    }
  }
  return out;
}

LeafPartition leaf_partition(const IncidenceModel& m, std::string_view x) {
  const std::size_t xi = m.index_of(x);
  LeafPartition p;
  p.basepoint = std::string(x);
  for (std::size_t y = 0; y < m.point_count(); ++y) {
    if (y == xi) continue;
    PointSet leaf = close(m, xi, y).leaf;
    auto it = std::find_if(p.leaves.begin(), p.leaves.end(), [&](const Leaf& l) { return l.points == leaf; });
    if (it == p.leaves.end()) {
      p.leaves.push_back(Leaf{std::move(leaf), {}, common_lines(m, xi, y) == 0});
      it = std::prev(p.leaves.end());
    }
    it->seeds.push_back(m.points()[y]);
  }
  for (std::size_t i = 0; i < p.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < p.leaves.size(); ++j) {
      PointSet common = p.leaves[i].points & p.leaves[j].points;
      common.reset(xi);
      if (common.any()) p.overlaps.emplace_back(i, j);
    }
  }
  return p;
}

QuotientReport quotient_e_check(const IncidenceModel& m, std::string_view x) {
  const std::size_t xi = m.index_of(x);
  QuotientReport r;
  if (!assumption_check(m).empty()) {
    r.reason = "closures are not symmetric";
    return r;
  }
  const LeafPartition part = leaf_partition(m, x);
  if (part.leaves.size() < 2) {
    r.reason = "fewer than two leaves at the basepoint";
    return r;
  }
  if (!part.overlaps.empty()) {
    r.reason = "leaves meet outside the basepoint";
    return r;
  }

  std::vector<std::string> qpoints;
  for (const auto& leaf : part.leaves) qpoints.push_back("L(" + leaf.seeds.front() + ")");

  // Image lines in first-appearance order, deduplicated.
  std::vector<std::vector<std::size_t>> images;
  for (const auto& l : m.lines()) {
    PointSet away = l;
    away.reset(xi);
    std::vector<std::size_t> image;
    for (std::size_t k = 0; k < part.leaves.size(); ++k) {
      if (part.leaves[k].points.intersects(away)) image.push_back(k);
    }
    if (image.size() < 2) continue;
    auto it = std::find(images.begin(), images.end(), image);
    if (it == images.end()) {
      images.push_back(std::move(image));
      r.line_multiplicity.push_back(1);
    } else {
      ++r.line_multiplicity[static_cast<std::size_t>(it - images.begin())];
    }
  }
  std::vector<std::vector<std::string>> named;
  for (const auto& image : images) {
    std::vector<std::string> names;
    for (auto k : image) names.push_back(qpoints[k]);
    named.push_back(std::move(names));
  }

  r.quotient.emplace(std::move(qpoints), std::move(named));
  r.distribution = distribution_of(*r.quotient);
  r.e_at_most_one = r.distribution.empty() || r.distribution.rbegin()->first <= 1;
  r.applicable = true;
  return r;
}

}  // namespace qlines
