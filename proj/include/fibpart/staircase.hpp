#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibpart/golden.hpp"
#include "fibpart/ratio.hpp"

namespace fibpart {

struct Interval {
  GoldenNum lo;
  GoldenNum hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const;
  bool contains(const GoldenNum& y) const;
  GoldenNum length() const { return hi - lo; }
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite union of disjoint intervals, kept sorted by left endpoint.
class Window {
 public:
  Window() = default;
  /// Drops empty pieces, sorts and merges overlapping or touching ones.
  explicit Window(std::vector<Interval> pieces);

  const std::vector<Interval>& intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }
  bool contains(const GoldenNum& y) const;
  /// Total Lebesgue length.
  GoldenNum length() const;

  friend Window intersect(const Window& a, const Window& b);
  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// Local multiplicative pattern: R contains the patch at time n when
/// R(n+i) = p_i R(n) for i = 1..k.
class Patch {
 public:
  /// Throws NonPositiveRatioError on an empty list or a nonpositive entry.
  explicit Patch(std::vector<Ratio> ratios);
  /// Comma separated entries, e.g. "1,1" or "2,3/2".
  static Patch parse(std::string_view text);

  const std::vector<Ratio>& ratios() const { return ratios_; }
  /// Successive quotients p_1, p_2/p_1, ..., p_k/p_{k-1}.
  std::vector<Ratio> steps() const;

 private:
  std::vector<Ratio> ratios_;
};

inline constexpr std::size_t kDefaultLevelSetSteps = 64;

/// {y : h(y) = q}: one interval in (-1/phi^2, 1/phi^3) and its mirror in
/// (1/phi^3, 1/phi). Reached by descending the Stern-Brocot tree of q
/// (q > 1 -> q - 1, q < 1 -> q / (1 - q)) down to 1; DepthExceededError
/// beyond `max_steps`, NonPositiveRatioError for q <= 0.
Window level_set(const Ratio& q, std::size_t max_steps = kDefaultLevelSetSteps);

/// Number of Stern-Brocot descent steps from q to 1.
std::size_t stern_brocot_depth(const Ratio& q);

struct Plateau {
  Interval interval;
  Ratio value;
};

/// All plateaus of h whose value lies within `depth` descent steps of 1,
/// sorted by left endpoint. The table has 2^(depth+2) - 2 entries.
std::vector<Plateau> staircase_table(unsigned depth);

/// Total length covered by staircase_table(depth), accumulated level by level.
GoldenNum staircase_coverage(unsigned depth);

/// T^{-1}(W) on the circle [-1/phi^2, 1/phi).
Window rotate_preimage(const Window& w);

/// {y : h(y) = p_1, h(T^{i-1} y) = p_i / p_{i-1} for 2 <= i <= k}.
Window patch_window(const Patch& patch);

/// n in [from, to] with y_n in the patch window.
std::vector<std::uint64_t> patch_hits(const Patch& patch, std::uint64_t from, std::uint64_t to);
inline std::vector<std::uint64_t> patch_hits(const Patch& patch, std::uint64_t limit) {
  return patch_hits(patch, 0, limit);
}

/// Same set computed from the definition R(n+i) = p_i R(n) on batch values.
std::vector<std::uint64_t> patch_hits_by_scan(const Patch& patch, std::uint64_t from, std::uint64_t to);

struct Density {
  GoldenNum exact;
  std::string approx;
};

/// Window length, which is the asymptotic frequency of the patch.
Density density(const Patch& patch, unsigned digits = 12);

struct RunStats {
  std::size_t k_max = 0;  ///< longest R(n) <= ... <= R(n+k)
  std::vector<std::uint64_t> witnesses;
  std::size_t strict_k_max = 0;  ///< longest R(n) < ... < R(n+k)
  std::vector<std::uint64_t> strict_witnesses;
};

/// Scans starting points n in [0, limit].
RunStats longest_nondecreasing_run(std::uint64_t limit);

}  // namespace fibpart
