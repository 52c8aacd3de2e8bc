#include "fibpart/staircase.hpp"

#include <algorithm>
#include <sstream>

#include "fibpart/counting.hpp"
#include "fibpart/dynamics.hpp"
#include "fibpart/errors.hpp"

namespace fibpart {

namespace g = golden;

// ---- Interval / Window ------------------------------------------------------

bool Interval::empty() const {
  const auto c = lo <=> hi;
  if (c > 0) return true;
  if (c == 0) return !(lo_closed && hi_closed);
  return false;
}

bool Interval::contains(const GoldenNum& y) const {
  const auto l = y <=> lo;
  if (l < 0 || (l == 0 && !lo_closed)) return false;
  const auto h = y <=> hi;
  return h < 0 || (h == 0 && hi_closed);
}

std::string Interval::str() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << to_string(lo) << ", " << to_string(hi) << (hi_closed ? ']' : ')');
  return os.str();
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (const auto c = a.lo <=> b.lo; c > 0) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (c < 0) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (const auto c = a.hi <=> b.hi; c < 0) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (c > 0) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (r.empty()) return std::nullopt;
  return r;
}

Window::Window(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return i.empty(); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    const auto c = a.lo <=> b.lo;
    if (c != 0) return c < 0;
    return a.lo_closed && !b.lo_closed;
  });
  for (auto& piece : pieces) {
    if (!pieces_.empty()) {
      Interval& last = pieces_.back();
      const auto c = piece.lo <=> last.hi;
      if (c < 0 || (c == 0 && (piece.lo_closed || last.hi_closed))) {
        if (const auto h = piece.hi <=> last.hi; h > 0) {
          last.hi = piece.hi;
          last.hi_closed = piece.hi_closed;
        } else if (h == 0) {
          last.hi_closed = last.hi_closed || piece.hi_closed;
        }
        continue;
      }
    }
    pieces_.push_back(std::move(piece));
  }
}

bool Window::contains(const GoldenNum& y) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& i) { return i.contains(y); });
}

GoldenNum Window::length() const {
  GoldenNum total = 0;
  for (const auto& i : pieces_) total += i.length();
  return total;
}

Window intersect(const Window& a, const Window& b) {
  std::vector<Interval> out;
  for (const auto& x : a.pieces_)
    for (const auto& y : b.pieces_)
      if (auto r = intersect(x, y)) out.push_back(std::move(*r));
  return Window(std::move(out));
}

// ---- Patch ------------------------------------------------------------------

Patch::Patch(std::vector<Ratio> ratios) : ratios_(std::move(ratios)) {
  if (ratios_.empty()) throw NonPositiveRatioError("patch must have at least one entry");
  for (const auto& r : ratios_)
    if (!r.positive()) throw NonPositiveRatioError("patch entry " + r.str() + " is not positive");
}

Patch Patch::parse(std::string_view text) {
  std::vector<Ratio> ratios;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    ratios.push_back(Ratio::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Patch(std::move(ratios));
}

std::vector<Ratio> Patch::steps() const {
  std::vector<Ratio> out;
  out.reserve(ratios_.size());
  out.push_back(ratios_.front());
  for (std::size_t i = 1; i < ratios_.size(); ++i) out.push_back(ratios_[i] / ratios_[i - 1]);
  return out;
}

// ---- Level sets -------------------------------------------------------------

namespace {

// z -> (1/phi - z)/phi maps (-1/phi^2, 1/phi^3) onto (1/phi^3, 1/phi).
GoldenNum mirror(const GoldenNum& z) { return (g::inv_phi() - z) * g::inv_phi(); }
// w -> -w/phi maps (1/phi^3, 1/phi) onto (-1/phi^2, -1/phi^4).
GoldenNum shrink_negate(const GoldenNum& w) { return -(w * g::inv_phi()); }

template <typename Map>
Interval map_decreasing(const Interval& i, Map f) {
  return {f(i.hi), f(i.lo), i.hi_closed, i.lo_closed};
}

Interval base_core() { return {-g::inv_phi4(), GoldenNum(0), true, true}; }

Interval up_child(const Interval& core) {  // value q -> q + 1
  return map_decreasing(map_decreasing(core, mirror), shrink_negate);
}

Interval down_child(const Interval& core) {  // value q -> q / (1 + q)
  return map_decreasing(map_decreasing(core, mirror), mirror);
}

std::vector<bool> descent_path(const Ratio& q, std::size_t max_steps) {
  if (!q.positive()) throw NonPositiveRatioError("level set value " + q.str() + " is not positive");
  std::vector<bool> ups;
  Integer num = q.num();
  Integer den = q.den();
  while (num != den) {
    if (ups.size() >= max_steps)
      throw DepthExceededError("Stern-Brocot descent of " + q.str() + " exceeds " + std::to_string(max_steps) +
                               " steps");
    if (num > den) {
      num -= den;
      ups.push_back(true);
    } else {
      den -= num;  // q/(1-q) = num/(den-num)
      ups.push_back(false);
    }
  }
  return ups;
}

}  // namespace

std::size_t stern_brocot_depth(const Ratio& q) {
  if (!q.positive()) throw NonPositiveRatioError("value " + q.str() + " is not positive");
  std::size_t steps = 0;
  Integer num = q.num();
  Integer den = q.den();
  while (num != den) {
    // Whole runs of equal moves at once: depth is the sum of partial quotients.
    if (num > den) {
      Integer t = (num - 1) / den;
      steps += t.convert_to<std::size_t>();
      num -= t * den;
    } else {
      Integer t = (den - 1) / num;
      steps += t.convert_to<std::size_t>();
      den -= t * num;
    }
  }
  return steps;
}

Window level_set(const Ratio& q, std::size_t max_steps) {
  const auto ups = descent_path(q, max_steps);
  Interval core = base_core();
  for (auto it = ups.rbegin(); it != ups.rend(); ++it) core = *it ? up_child(core) : down_child(core);
  Interval outer = map_decreasing(core, mirror);
  return Window({std::move(core), std::move(outer)});
}

std::vector<Plateau> staircase_table(unsigned depth) {
  struct Node {
    Interval core;
    Integer num;
    Integer den;
    unsigned level;
  };
  std::vector<Plateau> out;
  std::vector<Node> stack{{base_core(), 1, 1, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const Ratio value = Ratio::coprime(node.num, node.den);
    out.push_back({map_decreasing(node.core, mirror), value});
    if (node.level < depth) {
      stack.push_back({up_child(node.core), node.num + node.den, node.den, node.level + 1});
      stack.push_back({down_child(node.core), node.num, node.num + node.den, node.level + 1});
    }
    out.push_back({std::move(node.core), value});
  }
  std::sort(out.begin(), out.end(),
            [](const Plateau& a, const Plateau& b) { return a.interval.lo < b.interval.lo; });
  return out;
}

GoldenNum staircase_coverage(unsigned depth) {
  // Both child maps contract by 1/phi^2, so every plateau pair on level j
  // has the same length and there are 2^j of them.
  GoldenNum pair = base_core().length() * (GoldenNum(1) + g::inv_phi());
  GoldenNum total = 0;
  Integer count = 1;
  for (unsigned j = 0; j <= depth; ++j) {
    total += pair * GoldenNum(count);
    pair *= g::inv_phi2();
    count *= 2;
  }
  return total;
}

// ---- Patches ----------------------------------------------------------------

Window rotate_preimage(const Window& w) {
  const Interval upper{GoldenNum(0), g::inv_phi(), true, false};    // T^{-1}: subtract 1/phi^2
  const Interval lower{-g::inv_phi2(), GoldenNum(0), true, false};  // T^{-1}: add 1/phi
  std::vector<Interval> out;
  for (const auto& piece : w.intervals()) {
    if (auto a = intersect(piece, upper)) {
      a->lo -= g::inv_phi2();
      a->hi -= g::inv_phi2();
      out.push_back(std::move(*a));
    }
    if (auto b = intersect(piece, lower)) {
      b->lo += g::inv_phi();
      b->hi += g::inv_phi();
      out.push_back(std::move(*b));
    }
  }
  return Window(std::move(out));
}

Window patch_window(const Patch& patch) {
  const auto steps = patch.steps();
  Window w = level_set(steps.back());
  for (std::size_t i = steps.size() - 1; i-- > 0;) w = intersect(level_set(steps[i]), rotate_preimage(w));
  return w;
}

std::vector<std::uint64_t> patch_hits(const Patch& patch, std::uint64_t from, std::uint64_t to) {
  std::vector<std::uint64_t> out;
  if (to < from) return out;
  const Window w = patch_window(patch);
  if (w.empty()) return out;
  OrbitPoint pt = orbit_point(Integer(from));
  for (std::uint64_t n = from;; ++n) {
    if (w.contains(pt.y)) out.push_back(n);
    if (n == to) break;
    pt = successor(pt);
  }
  return out;
}

std::vector<std::uint64_t> patch_hits_by_scan(const Patch& patch, std::uint64_t from, std::uint64_t to) {
  std::vector<std::uint64_t> out;
  if (to < from) return out;
  const auto& p = patch.ratios();
  const std::size_t k = p.size();
  const auto r = r_values(from, to + k);
  for (std::uint64_t n = from; n <= to; ++n) {
    const std::size_t base = n - from;
    bool hit = true;
    for (std::size_t i = 1; i <= k && hit; ++i)
      hit = r[base + i] * p[i - 1].den() == p[i - 1].num() * r[base];
    if (hit) out.push_back(n);
  }
  return out;
}

Density density(const Patch& patch, unsigned digits) {
  GoldenNum len = patch_window(patch).length();
  std::string approx = to_decimal(len, digits);
  return {std::move(len), std::move(approx)};
}

RunStats longest_nondecreasing_run(std::uint64_t limit) {
  constexpr std::uint64_t kLookahead = 16;
  const auto r = r_values(0, limit + kLookahead);
  std::vector<std::size_t> weak(r.size(), 0);
  std::vector<std::size_t> strict(r.size(), 0);
  for (std::size_t i = r.size() - 1; i-- > 0;) {
    if (r[i] <= r[i + 1]) weak[i] = weak[i + 1] + 1;
    if (r[i] < r[i + 1]) strict[i] = strict[i + 1] + 1;
  }
  RunStats s;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    if (weak[n] > s.k_max) {
      s.k_max = weak[n];
      s.witnesses.clear();
    }
    if (weak[n] == s.k_max) s.witnesses.push_back(n);
    if (strict[n] > s.strict_k_max) {
      s.strict_k_max = strict[n];
      s.strict_witnesses.clear();
    }
    if (strict[n] == s.strict_k_max) s.strict_witnesses.push_back(n);
  }
  return s;
}

}  // namespace fibpart
