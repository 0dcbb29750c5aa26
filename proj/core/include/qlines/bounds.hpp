#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlines/bigmath.hpp"

namespace qlines {

/// Local data of the foliation at a basepoint x of an n-dimensional X.
///
/// Requires 1 <= rank <= n and 0 <= sing_dim <= n - 2 (the singular locus of
/// a foliation has codimension at least two); violations throw DomainError.
/// Profiles with sing_dim < rank - 1 cannot occur geometrically but are
/// accepted so hypothetical inputs can be probed; reports flag them.
struct FoliationProfile {
  int n;
  int rank;
  int sing_dim;

  FoliationProfile(int n, int rank, int sing_dim);
};

/// Degrees entering the counting bounds. Every field must be positive.
struct DegreeData {
  std::int64_t deg_l = 1;     // H-degree of the quasi-line
  std::int64_t deg_X = 1;     // H-degree of X
  std::int64_t d = 1;         // H.l
  std::int64_t surf_deg = 1;  // degree of the leaf surface in its embedding
  std::optional<std::int64_t> h0;

  void validate() const;
};

/// (binom(top, bottom))^exponent; the closed form of a Chow-type bound.
struct BinomialPower {
  std::int64_t top;
  std::int64_t bottom;
  std::int64_t exponent;

  friend bool operator==(const BinomialPower&, const BinomialPower&) = default;
};

struct BoundReport {
  std::string statement;  // stable identifier, e.g. "chow_component"
  std::string formula;    // the evaluated expression in plain text
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  BigRational value;
  std::optional<BinomialPower> form;
  double log10 = 0.0;  // display only
  std::vector<std::string> flags;

  bool is_integer() const;
  /// Digits of the integer part of value.
  std::size_t digits() const;
};

/// Case (II) bound for threefolds with rank-2 foliation: 16 deg_l^3 / deg_X.
BoundReport dichotomy_bound(std::int64_t deg_l, std::int64_t deg_X);

/// Default section bound h0 = (d+1)(d+2)/2 for a surface spanned by
/// quasi-lines of degree d.
std::int64_t default_h0(std::int64_t d);

/// Chow-component bound binom(h0 * max(d, surf_deg), h0 - 1)^(d^2 * h0).
///
/// With the default h0 this is binom((d+1)(d+2)/2 * max(d, H^2), d(d+3)/2)
/// raised to d^2 (d+1)(d+2)/2, since h0 - 1 = d(d+3)/2; an explicit h0 (for
/// instance h0(-K) = 5 on the quintic del Pezzo surface) sharpens it.
/// Throws DomainError for non-positive arguments or if the result would
/// exceed kMaxBoundDigits decimal digits.
BoundReport chow_component_bound(std::int64_t d, std::int64_t surf_deg, std::optional<std::int64_t> h0 = {});

inline constexpr double kMaxBoundDigits = 5e6;

/// Smallest guaranteed bound on E.l for the exceptional divisor of the leaf
/// through x: returns d0 - 1 where d0 >= 2 is minimal with
///   sing_dim < rank - 1 + (d0 - 1)/d0 * (n - rank).
/// Comparison is exact. Throws DomainError when rank == n.
int leaf_section_bound(const FoliationProfile& p);
BoundReport leaf_section_report(const FoliationProfile& p);

/// dim_x of the singular locus is at least rank - 1.
int sing_dim_lower_bound(int rank);
bool sing_dim_consistent(const FoliationProfile& p);

/// (D^2)(H^2) <= (D.H)^2 on a surface; H2 must be positive.
bool hodge_surface_check(std::int64_t D2, std::int64_t H2, std::int64_t DH);

/// (D^2.H)(H^3) <= (D.H^2)^2 on a threefold; H3 must be positive.
bool hodge_threefold_check(std::int64_t D2H, std::int64_t H3, std::int64_t DH2);

/// Comb-smoothing bound on the leaf degree: (mu^* H)^2 <= 4 deg_l^2.
std::int64_t leaf_degree_bound(std::int64_t deg_l);

/// ((d+1)(d+2)/2, d(d+3)/2): bound on h^0(O(H)) of the leaf and on the
/// dimension N of the projective space it embeds into.
std::pair<std::int64_t, std::int64_t> h0_and_embedding_bounds(std::int64_t d);

}  // namespace qlines
