#include "qlines/lattice.hpp"

#include <sstream>

#include "checked.hpp"
#include "qlines/errors.hpp"

namespace qlines {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

SurfaceModel::SurfaceModel(int n) : n_(n) {
  if (n < 0 || n > kMaxPoints) {
    throw DomainError("number of blown-up points must lie in 0..8, got " + std::to_string(n));
  }
}

DivisorClass DivisorClass::hyperplane(const SurfaceModel& s) {
  return DivisorClass(1, std::vector<std::int64_t>(static_cast<std::size_t>(s.n()), 0));
}

DivisorClass DivisorClass::exceptional(const SurfaceModel& s, int i) {
  if (i < 1 || i > s.n()) {
    throw DomainError("exceptional index " + std::to_string(i) + " outside 1.." + std::to_string(s.n()));
  }
  std::vector<std::int64_t> e(static_cast<std::size_t>(s.n()), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return DivisorClass(0, std::move(e));
}

DivisorClass DivisorClass::zero(const SurfaceModel& s) {
  return DivisorClass(0, std::vector<std::int64_t>(static_cast<std::size_t>(s.n()), 0));
}

std::vector<std::int64_t> DivisorClass::coefficients() const {
  std::vector<std::int64_t> out;
  out.reserve(e_.size() + 1);
  out.push_back(h_);
  out.insert(out.end(), e_.begin(), e_.end());
  return out;
}

namespace {

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (a.n() != b.n()) {
    throw DimensionMismatch("classes live on different lattices (n=" + std::to_string(a.n()) +
                            " vs n=" + std::to_string(b.n()) + ")");
  }
}

void require_on_surface(const SurfaceModel& s, const DivisorClass& a) {
  if (a.n() != s.n()) {
    throw DimensionMismatch("class " + a.to_string() + " has " + std::to_string(a.n()) +
                            " exceptional coefficients, surface has n=" + std::to_string(s.n()));
  }
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_lattice(*this, other);
  std::vector<std::int64_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_add(e_[i], other.e_[i]);
  return DivisorClass(checked_add(h_, other.h_), std::move(e));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_lattice(*this, other);
  std::vector<std::int64_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_sub(e_[i], other.e_[i]);
  return DivisorClass(checked_sub(h_, other.h_), std::move(e));
}

DivisorClass DivisorClass::operator-() const { return (-1) * (*this); }

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
  std::vector<std::int64_t> e(a.e_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(k, a.e_[i]);
  return DivisorClass(checked_mul(k, a.h_), std::move(e));
}

DivisorClass DivisorClass::permuted(std::span<const int> perm) const {
  if (perm.size() != e_.size()) throw DimensionMismatch("permutation length differs from n");
  std::vector<std::int64_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e.at(static_cast<std::size_t>(perm[i])) = e_[i];
  return DivisorClass(h_, std::move(e));
}

DivisorClass DivisorClass::extended(const SurfaceModel& target) const {
  if (target.n() < n()) throw DimensionMismatch("cannot extend to a surface with fewer points");
  std::vector<std::int64_t> e(e_);
  e.resize(static_cast<std::size_t>(target.n()), 0);
  return DivisorClass(h_, std::move(e));
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << sym;
    first = false;
  };
  term(h_, "H");
  for (std::size_t i = 0; i < e_.size(); ++i) term(e_[i], "E" + std::to_string(i + 1));
  if (first) return "0";
  return os.str();
}

std::int64_t intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
  require_on_surface(s, a);
  require_on_surface(s, b);
  std::int64_t acc = checked_mul(a.h(), b.h());
  auto ae = a.e();
  auto be = b.e();
  for (std::size_t i = 0; i < ae.size(); ++i) acc = checked_sub(acc, checked_mul(ae[i], be[i]));
  return acc;
}

std::int64_t self_intersection(const SurfaceModel& s, const DivisorClass& a) { return intersect(s, a, a); }

DivisorClass canonical_class(const SurfaceModel& s) {
  return DivisorClass(-3, std::vector<std::int64_t>(static_cast<std::size_t>(s.n()), 1));
}

std::int64_t anticanonical_degree(const SurfaceModel& s, const DivisorClass& a) {
  return -intersect(s, canonical_class(s), a);
}

bool satisfies_hodge_index(const SurfaceModel& s, const DivisorClass& d) {
  const DivisorClass anti = -canonical_class(s);
  __extension__ using wide = __int128;
  const wide da = intersect(s, d, anti);
  const wide dd = self_intersection(s, d);
  const wide aa = self_intersection(s, anti);
  return da * da >= dd * aa;
}

}  // namespace qlines
