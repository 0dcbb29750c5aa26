#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qlines {

/// Picard lattice of the blow-up of P^2 in n general points, 0 <= n <= 8.
///
/// Basis (H, E_1, ..., E_n) with Gram matrix diag(1, -1, ..., -1). Every other
/// module relies on this convention.
class SurfaceModel {
 public:
  static constexpr int kMaxPoints = 8;

  /// Throws DomainError unless 0 <= n <= 8.
  explicit SurfaceModel(int n);

  int n() const noexcept { return n_; }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  int n_;
};

/// Integer class h*H + sum e_i*E_i. Value type; the length of e fixes the
/// lattice it lives in.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::int64_t h, std::vector<std::int64_t> e) : h_(h), e_(std::move(e)) {}

  /// Basis vectors on a given surface.
  static DivisorClass hyperplane(const SurfaceModel& s);
  static DivisorClass exceptional(const SurfaceModel& s, int i);  // 1-based
  static DivisorClass zero(const SurfaceModel& s);

  std::int64_t h() const noexcept { return h_; }
  std::span<const std::int64_t> e() const noexcept { return e_; }
  std::int64_t e(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
  int n() const noexcept { return static_cast<int>(e_.size()); }

  /// Flattened coefficients [h, e_1, ..., e_n].
  std::vector<std::int64_t> coefficients() const;

  /// Checked arithmetic; throws DimensionMismatch or OverflowError.
  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& a);

  /// Permutes exceptional indices: result.e[perm[i]] = e[i] (0-based perm).
  DivisorClass permuted(std::span<const int> perm) const;

  /// Zero-pads to a surface with more blown-up points.
  DivisorClass extended(const SurfaceModel& target) const;

  /// "2H-E1-E2-E3-E4-E5", "E3", "-3H+E1+E2", "0".
  std::string to_string() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::int64_t h_ = 0;
  std::vector<std::int64_t> e_;
};

/// a.h*b.h - sum a.e_i*b.e_i. Throws DimensionMismatch if either class is not
/// on s, OverflowError on int64 overflow.
std::int64_t intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);

std::int64_t self_intersection(const SurfaceModel& s, const DivisorClass& a);

/// K = -3H + E_1 + ... + E_n, with K^2 = 9 - n.
DivisorClass canonical_class(const SurfaceModel& s);

/// Degree with respect to -K.
std::int64_t anticanonical_degree(const SurfaceModel& s, const DivisorClass& a);

/// Hodge index inequality (D.A)^2 >= D^2 * A^2 evaluated for A = -K. Holds for
/// every integer class when n <= 8 since the form has signature (1, n) and -K
/// is ample; exposed as a checkable predicate.
bool satisfies_hodge_index(const SurfaceModel& s, const DivisorClass& d);

}  // namespace qlines
