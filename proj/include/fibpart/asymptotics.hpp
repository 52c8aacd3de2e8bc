#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibpart/golden.hpp"
#include "fibpart/integer.hpp"
#include "fibpart/ratio.hpp"

namespace fibpart {

/// log 2 / log phi, evaluated once at 50 significant digits.
long double growth_exponent();
std::string growth_exponent_digits();

/// (phi sqrt5)^(log 2 / log phi), the scale of the limit profile.
long double profile_constant();

/// Immutable table A(0..max_h) built by one batch pass.
class PartialSums {
 public:
  explicit PartialSums(std::uint64_t max_h);

  std::uint64_t max_h() const { return values_.size() - 1; }
  /// A(H); throws std::out_of_range above max_h().
  const Integer& at(std::uint64_t H) const;

 private:
  std::vector<Integer> values_;
};

struct GrowthSample {
  std::uint64_t H;
  long double logH;
  long double ratio;  ///< A(H) / H^alpha
};

long double growth_ratio(const Integer& a_of_h, std::uint64_t H);

/// Samples for every H in [h_min, h_max]; requires 1 <= h_min <= h_max.
std::vector<GrowthSample> growth_curve(const PartialSums& sums, std::uint64_t h_min, std::uint64_t h_max);
std::vector<GrowthSample> growth_curve(std::uint64_t h_min, std::uint64_t h_max);

struct Extremes {
  long double min_ratio;
  std::uint64_t argmin;
  long double max_ratio;
  std::uint64_t argmax;
};

Extremes extremes(const PartialSums& sums, std::uint64_t h_min, std::uint64_t h_max);
Extremes extremes(std::uint64_t h_min, std::uint64_t h_max);

/// Exact element num / den of Q(phi), den > 0.
struct GoldenFraction {
  GoldenNum num;
  Integer den = 1;

  /// Accepts a decimal ("0.8090"), a fraction ("3/4"), "phi" or "phi/N".
  static GoldenFraction parse(std::string_view text);
  long double value() const;
  std::string decimal(unsigned digits = 12) const;
};

Sign sign(const GoldenFraction& x);

/// Dyadic sandwich lower <= G(x) <= upper for the CDF G of the golden
/// Bernoulli convolution, from the length-k words up to x (upper) and up
/// to x - phi^(1-k) (lower). Both counts are over 2^k.
struct CdfBound {
  GoldenFraction x;
  unsigned k = 0;
  Integer lower_count;
  Integer upper_count;

  Ratio lower() const;
  Ratio upper() const;
  long double midpoint() const;
};

/// Largest A index that cdf_bounds at depth k may need.
std::uint64_t cdf_sums_needed(unsigned k);

/// Number of words a_1..a_k with sum a_i phi^(k+2-i) <= threshold / den.
Integer words_below(const GoldenNum& threshold, const Integer& den, unsigned k, const PartialSums& sums);

/// Requires 0 <= x <= phi (OutOfDomainError otherwise) and k >= 2.
CdfBound cdf_bounds(const GoldenFraction& x, unsigned k, const PartialSums& sums);
CdfBound cdf_bounds(const GoldenFraction& x, unsigned k);

struct ProfilePoint {
  GoldenFraction gamma;
  long double gamma_value;
  long double value;  ///< profile_constant() * G(gamma / phi^3) / gamma^alpha
  CdfBound bound;
};

/// gamma_i = 1 + (phi - 1) i / (samples - 1), i = 0..samples-1, with G
/// replaced by the midpoint of its depth-k sandwich.
std::vector<ProfilePoint> limit_profile(std::size_t samples, unsigned depth, const PartialSums& sums);
std::vector<ProfilePoint> limit_profile(std::size_t samples, unsigned depth);

/// floor(gamma * F_m).
std::uint64_t scaled_fibonacci_index(const GoldenFraction& gamma, unsigned m);

}  // namespace fibpart
