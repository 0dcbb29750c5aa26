#include "qlines/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "checked.hpp"
#include "qlines/errors.hpp"

namespace qlines {

using detail::checked_add;
using detail::checked_mul;

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be positive, got " + std::to_string(v));
}

}  // namespace

FoliationProfile::FoliationProfile(int n_, int rank_, int sing_dim_) : n(n_), rank(rank_), sing_dim(sing_dim_) {
  if (n < 1) throw DomainError("dimension n must be positive");
  if (rank < 1 || rank > n) {
    throw DomainError("rank must lie in 1..n=" + std::to_string(n) + ", got " + std::to_string(rank));
  }
  if (sing_dim < 0 || sing_dim > n - 2) {
    throw DomainError("singular locus dimension must lie in 0..n-2=" + std::to_string(n - 2) + ", got " +
                      std::to_string(sing_dim));
  }
}

void DegreeData::validate() const {
  require_positive(deg_l, "deg_l");
  require_positive(deg_X, "deg_X");
  require_positive(d, "d");
  require_positive(surf_deg, "surf_deg");
  if (h0) require_positive(*h0, "h0");
}

bool BoundReport::is_integer() const { return boost::multiprecision::denominator(value) == 1; }

std::size_t BoundReport::digits() const {
  return decimal_digits(boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value));
}

BoundReport dichotomy_bound(std::int64_t deg_l, std::int64_t deg_X) {
  require_positive(deg_l, "deg_l");
  require_positive(deg_X, "deg_X");
  BoundReport r;
  r.statement = "dichotomy";
  r.formula = "16 * deg_l^3 / deg_X";
  r.inputs = {{"deg_l", deg_l}, {"deg_X", deg_X}};
  r.value = BigRational(16 * power(BigInt(deg_l), 3), BigInt(deg_X));
  r.log10 = log10_of(r.value);
  return r;
}

std::int64_t default_h0(std::int64_t d) {
  require_positive(d, "d");
  return checked_mul(checked_add(d, 1), checked_add(d, 2)) / 2;
}

BoundReport chow_component_bound(std::int64_t d, std::int64_t surf_deg, std::optional<std::int64_t> h0) {
  require_positive(d, "d");
  require_positive(surf_deg, "surf_deg");
  const bool explicit_h0 = h0.has_value();
  const std::int64_t sections = explicit_h0 ? *h0 : default_h0(d);
  require_positive(sections, "h0");

  const BinomialPower form{checked_mul(sections, std::max(d, surf_deg)), sections - 1,
                           checked_mul(checked_mul(d, d), sections)};

  // Size check before materializing: log10 C(a, b) via lgamma.
  const auto a = static_cast<double>(form.top);
  const auto b = static_cast<double>(form.bottom);
  const double log10_binom = (std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1)) / std::log(10.0);
  if (log10_binom * static_cast<double>(form.exponent) > kMaxBoundDigits) {
    throw DomainError("Chow bound has about " + std::to_string(log10_binom * static_cast<double>(form.exponent)) +
                      " digits; refusing to materialize");
  }

  BoundReport r;
  r.statement = "chow_component";
  r.formula = "binom(h0 * max(d, surf_deg), h0 - 1)^(d^2 * h0)";
  r.inputs = {{"d", d}, {"surf_deg", surf_deg}, {"h0", sections}};
  if (!explicit_h0) r.flags.emplace_back("h0 defaulted to (d+1)(d+2)/2");
  const BigInt base = binomial(form.top, form.bottom);
  r.value = BigRational(power(base, static_cast<std::uint64_t>(form.exponent)));
  r.form = form;
  r.log10 = static_cast<double>(form.exponent) * log10_of(base);
  return r;
}

int leaf_section_bound(const FoliationProfile& p) {
  if (p.rank >= p.n) throw DomainError("leaf section bound needs rank < n (non-trivial foliation)");
  // sing < rank - 1 + (d - 1)/d * (n - rank)
  //   <=>  d * sing < d * (rank - 1) + (d - 1) * (n - rank)   (d > 0)
  // The right side tends to n - 1 > sing, so some d <= n - rank + 1 works.
  const std::int64_t n = p.n, rank = p.rank, sing = p.sing_dim;
  const std::int64_t cap = n * (n + 1);
  for (std::int64_t d = 2; d <= cap; ++d) {
    if (d * sing < d * (rank - 1) + (d - 1) * (n - rank)) return static_cast<int>(d - 1);
  }
  throw std::logic_error("leaf section scan exceeded d <= n(n+1)");
}

BoundReport leaf_section_report(const FoliationProfile& p) {
  BoundReport r;
  r.statement = "leaf_section";
  r.formula = "min{d >= 2 : sing_dim < rank - 1 + (d-1)/d (n - rank)} - 1";
  r.inputs = {{"n", p.n}, {"rank", p.rank}, {"sing_dim", p.sing_dim}};
  r.value = leaf_section_bound(p);
  r.log10 = log10_of(r.value);
  if (!sing_dim_consistent(p)) r.flags.emplace_back("inconsistent profile: sing_dim < rank - 1");
  return r;
}

int sing_dim_lower_bound(int rank) {
  if (rank < 1) throw DomainError("rank must be positive");
  return rank - 1;
}

bool sing_dim_consistent(const FoliationProfile& p) { return p.sing_dim >= sing_dim_lower_bound(p.rank); }

bool hodge_surface_check(std::int64_t D2, std::int64_t H2, std::int64_t DH) {
  if (H2 < 1) throw DomainError("H^2 must be positive for an ample H");
  return BigInt(D2) * H2 <= BigInt(DH) * DH;
}

bool hodge_threefold_check(std::int64_t D2H, std::int64_t H3, std::int64_t DH2) {
  if (H3 < 1) throw DomainError("H^3 must be positive for an ample H");
  return BigInt(D2H) * H3 <= BigInt(DH2) * DH2;
}

std::int64_t leaf_degree_bound(std::int64_t deg_l) {
  require_positive(deg_l, "deg_l");
  return checked_mul(4, checked_mul(deg_l, deg_l));
}

std::pair<std::int64_t, std::int64_t> h0_and_embedding_bounds(std::int64_t d) {
  require_positive(d, "d");
  const std::int64_t h0 = default_h0(d);
  return {h0, checked_mul(d, checked_add(d, 3)) / 2};
}

}  // namespace qlines
