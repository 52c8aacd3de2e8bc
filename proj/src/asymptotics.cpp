#include "fibpart/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fibpart/counting.hpp"
#include "fibpart/dynamics.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/zeckendorf.hpp"

namespace fibpart {

namespace {

using Dec50 = boost::multiprecision::cpp_dec_float_50;

const Dec50& alpha50() {
  static const Dec50 a = [] {
    const Dec50 phi = (Dec50(1) + boost::multiprecision::sqrt(Dec50(5))) / 2;
    return boost::multiprecision::log(Dec50(2)) / boost::multiprecision::log(phi);
  }();
  return a;
}

}  // namespace

long double growth_exponent() {
  static const long double a = alpha50().convert_to<long double>();
  return a;
}

std::string growth_exponent_digits() { return alpha50().str(50, std::ios_base::fmtflags(0)); }

long double profile_constant() {
  static const long double c = [] {
    const Dec50 s5 = boost::multiprecision::sqrt(Dec50(5));
    const Dec50 phi = (Dec50(1) + s5) / 2;
    return boost::multiprecision::pow(phi * s5, alpha50()).convert_to<long double>();
  }();
  return c;
}

// ---- A(H) and the growth curve ---------------------------------------------

PartialSums::PartialSums(std::uint64_t max_h) : values_(prefix_sums(max_h)) {}

const Integer& PartialSums::at(std::uint64_t H) const {
  if (H >= values_.size())
    throw std::out_of_range("A(" + std::to_string(H) + ") requested from a table up to " +
                            std::to_string(max_h()));
  return values_[H];
}

long double growth_ratio(const Integer& a_of_h, std::uint64_t H) {
  const long double h = static_cast<long double>(H);
  return a_of_h.convert_to<long double>() / std::pow(h, growth_exponent());
}

std::vector<GrowthSample> growth_curve(const PartialSums& sums, std::uint64_t h_min, std::uint64_t h_max) {
  if (h_min < 1 || h_min > h_max) throw std::invalid_argument("growth_curve needs 1 <= Hmin <= Hmax");
  std::vector<GrowthSample> out;
  out.reserve(h_max - h_min + 1);
  for (std::uint64_t H = h_min; H <= h_max; ++H)
    out.push_back({H, std::log(static_cast<long double>(H)), growth_ratio(sums.at(H), H)});
  return out;
}

std::vector<GrowthSample> growth_curve(std::uint64_t h_min, std::uint64_t h_max) {
  return growth_curve(PartialSums(h_max), h_min, h_max);
}

Extremes extremes(const PartialSums& sums, std::uint64_t h_min, std::uint64_t h_max) {
  if (h_min < 1 || h_min > h_max) throw std::invalid_argument("extremes needs 1 <= Hmin <= Hmax");
  Extremes e{growth_ratio(sums.at(h_min), h_min), h_min, 0, h_min};
  e.max_ratio = e.min_ratio;
  for (std::uint64_t H = h_min + 1; H <= h_max; ++H) {
    const long double r = growth_ratio(sums.at(H), H);
    if (r < e.min_ratio) {
      e.min_ratio = r;
      e.argmin = H;
    }
    if (r > e.max_ratio) {
      e.max_ratio = r;
      e.argmax = H;
    }
  }
  return e;
}

Extremes extremes(std::uint64_t h_min, std::uint64_t h_max) { return extremes(PartialSums(h_max), h_min, h_max); }

// ---- Q(phi) values -----------------------------------------------------------

GoldenFraction GoldenFraction::parse(std::string_view text) {
  if (text.starts_with("phi")) {
    std::string_view rest = text.substr(3);
    if (rest.empty()) return {GoldenNum::phi(), 1};
    if (rest.front() != '/') throw std::invalid_argument("expected phi or phi/N, got '" + std::string(text) + "'");
    Integer den = parse_integer(rest.substr(1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return {GoldenNum::phi(), den};
  }
  const Ratio r = Ratio::parse(text);
  return {GoldenNum(r.num()), r.den()};
}

long double GoldenFraction::value() const {
  return static_cast<long double>(to_double(num)) / den.convert_to<long double>();
}

std::string GoldenFraction::decimal(unsigned digits) const {
  // floor(10^d num / den) correctly rounded through one extra digit.
  const Integer m = floor_div(floor_scaled(num, pow10(digits + 1)), den);
  Integer rounded = floor_div(m + 5, 10);
  const bool negative = rounded < 0;
  std::string body = to_string(abs(rounded));
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return out;
}

Sign sign(const GoldenFraction& x) { return sign(x.num); }

// ---- CDF sandwich ------------------------------------------------------------

Ratio CdfBound::lower() const { return Ratio(lower_count, Integer(1) << k); }
Ratio CdfBound::upper() const { return Ratio(upper_count, Integer(1) << k); }

long double CdfBound::midpoint() const {
  const Integer sum = lower_count + upper_count;
  return std::ldexp(sum.convert_to<long double>(), -static_cast<int>(k) - 1);
}

std::uint64_t cdf_sums_needed(unsigned k) { return fib_u64(k + 2) - 1; }

Integer words_below(const GoldenNum& threshold, const Integer& den, unsigned k, const PartialSums& sums) {
  // Word values are orbit x-coordinates x_m with m = decoded value, and x_m
  // increases with m, so the count is a prefix over m. Length-k words hit m
  // R(m) times for m < F_{k+2} and, by digit complement, R(M - m) times
  // above, where M = F_{k+3} - 2 is the largest decodable value.
  if (sign(threshold) == Sign::negative) return 0;
  const std::uint64_t M = fib_u64(k + 3) - 2;
  auto below = [&](std::uint64_t n) { return sign(orbit_point(Integer(n)).x * GoldenNum(den) - threshold) != Sign::positive; };
  std::uint64_t lo = 0;  // x_0 = 0 <= threshold
  std::uint64_t hi = M;
  if (below(M)) {
    lo = M;
  } else {
    while (hi - lo > 1) {  // invariant: below(lo), !below(hi)
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (below(mid) ? lo : hi) = mid;
    }
  }
  const std::uint64_t H = lo;
  if (H < fib_u64(k + 2)) return sums.at(H);
  const Integer all = Integer(1) << k;
  if (H == M) return all;
  return all - sums.at(M - H - 1);
}

CdfBound cdf_bounds(const GoldenFraction& x, unsigned k, const PartialSums& sums) {
  if (k < 2) throw std::invalid_argument("cdf_bounds needs depth k >= 2");
  if (x.den <= 0) throw std::invalid_argument("cdf_bounds: denominator must be positive");
  if (sign(x.num) == Sign::negative || x.num > GoldenNum::phi() * GoldenNum(x.den))
    throw OutOfDomainError("cdf_bounds: x = " + x.decimal() + " is outside [0, phi]");
  const GoldenNum scaled = x.num * GoldenNum::phi_pow(k + 2);
  CdfBound b;
  b.x = x;
  b.k = k;
  b.upper_count = words_below(scaled, x.den, k, sums);
  b.lower_count = words_below(scaled - GoldenNum::phi_pow(3) * GoldenNum(x.den), x.den, k, sums);
  return b;
}

CdfBound cdf_bounds(const GoldenFraction& x, unsigned k) {
  if (k < 2) throw std::invalid_argument("cdf_bounds needs depth k >= 2");
  return cdf_bounds(x, k, PartialSums(cdf_sums_needed(k)));
}

// ---- limit profile -----------------------------------------------------------

std::vector<ProfilePoint> limit_profile(std::size_t samples, unsigned depth, const PartialSums& sums) {
  if (samples < 2) throw std::invalid_argument("limit_profile needs at least 2 samples");
  const long double alpha = growth_exponent();
  const long double scale = profile_constant();
  const Integer steps = samples - 1;
  std::vector<ProfilePoint> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    // gamma = ((m-1) + i (phi - 1)) / (m-1)
    GoldenFraction gamma{GoldenNum(steps) + golden::inv_phi() * GoldenNum(Integer(i)), steps};
    GoldenFraction x{gamma.num * golden::inv_phi3(), gamma.den};
    CdfBound bound = cdf_bounds(x, depth, sums);
    const long double g = gamma.value();
    const long double value = scale * bound.midpoint() / std::pow(g, alpha);
    out.push_back({std::move(gamma), g, value, std::move(bound)});
  }
  return out;
}

std::vector<ProfilePoint> limit_profile(std::size_t samples, unsigned depth) {
  return limit_profile(samples, depth, PartialSums(cdf_sums_needed(depth)));
}

std::uint64_t scaled_fibonacci_index(const GoldenFraction& gamma, unsigned m) {
  return to_u64(floor_div(floor_scaled(gamma.num, fib(m)), gamma.den));
}

}  // namespace fibpart
