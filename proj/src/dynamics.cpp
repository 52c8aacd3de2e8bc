#include "fibpart/dynamics.hpp"

#include <algorithm>
#include <string>

#include "fibpart/errors.hpp"

namespace fibpart {

namespace g = golden;

namespace {

const GoldenNum& strip_lo() {
  static const GoldenNum v = -g::inv_phi2();
  return v;
}

// Pending operation on the value of h (or k) while unwinding the recursion.
enum class Step : unsigned char { plus_one, fraction, same };

Ratio fold(const std::vector<Step>& steps) {
  // (num, den) stays coprime: each step is a unimodular substitution.
  Integer num = 1;
  Integer den = 1;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (*it) {
      case Step::plus_one:
        num += den;
        break;
      case Step::fraction:
        den += num;
        break;
      case Step::same:
        break;
    }
  }
  return Ratio::coprime(std::move(num), std::move(den));
}

std::size_t default_depth(const GoldenNum& y) {
  return 4 * std::max(bit_length(y.p()), bit_length(y.q())) + 64;
}

// y -> -phi y + 1/phi
GoldenNum strip_one(const GoldenNum& y) { return times_minus_phi(y) + g::inv_phi(); }

}  // namespace

GoldenNum times_minus_phi(const GoldenNum& a) {
  // -phi (p + q phi) = -q + (-p - q) phi
  return {-a.q(), -a.p() - a.q()};
}

bool in_strip(const GoldenNum& y) { return y >= strip_lo() && y < g::inv_phi(); }

GoldenNum rotate(const GoldenNum& y) {
  if (!in_strip(y)) throw OutOfDomainError("rotate: " + to_string(y) + " is outside [-1/phi^2, 1/phi)");
  if (y < g::inv_phi3()) return y + g::inv_phi2();
  return y + g::inv_phi2() - 1;
}

GoldenNum rotate_inverse(const GoldenNum& y) {
  if (!in_strip(y))
    throw OutOfDomainError("rotate_inverse: " + to_string(y) + " is outside [-1/phi^2, 1/phi)");
  if (sign(y) != Sign::negative) return y - g::inv_phi2();
  return y + g::inv_phi();
}

OrbitPoint orbit_point(const Integer& n) {
  if (n < 0) throw std::domain_error("orbit_point expects n >= 0");
  // p + n psi + 1/phi^2 = p + 1 + (n + 1) psi must lie in [0, 1).
  Integer p = -1 - floor_mul_psi(n + 1);
  GoldenNum x{p, n};
  GoldenNum y = x.conjugate();
  return {n, std::move(x), std::move(y)};
}

OrbitPoint successor(const OrbitPoint& pt) {
  OrbitPoint next = pt;
  next.n += 1;
  if (pt.y < g::inv_phi3()) {
    next.x += GoldenNum{1, 1};
    next.y += GoldenNum{2, -1};  // 1 + psi = 2 - phi
  } else {
    next.x += GoldenNum::phi();
    next.y += GoldenNum{1, -1};  // psi = 1 - phi
  }
  return next;
}

Integer g_index(const GoldenNum& x, const GoldenNum& y) {
  if (y != x.conjugate())
    throw InvalidPointError("g_index: y = " + to_string(y) + " is not the conjugate of x = " + to_string(x));
  if (!in_strip(y)) throw InvalidPointError("g_index: y = " + to_string(y) + " lies outside the strip");
  if (x.q() < 0) throw InvalidPointError("g_index: negative index " + to_string(x.q()));
  return x.q();
}

Ratio h_eval(const GoldenNum& y0, std::optional<std::size_t> max_depth) {
  if (y0 == g::inv_phi3()) throw BreakpointError("h is undefined at 1/phi^3");
  if (y0 == strip_lo() || y0 == g::inv_phi())
    throw BreakpointError("h is undefined on the boundary of its domain: " + to_string(y0));
  if (y0 < strip_lo() || y0 > g::inv_phi())
    throw OutOfDomainError("h_eval: " + to_string(y0) + " is outside (-1/phi^2, 1/phi)");

  const std::size_t bound = max_depth.value_or(default_depth(y0));
  const GoldenNum lo_base = -g::inv_phi4();
  std::vector<Step> steps;
  GoldenNum y = y0;
  for (;;) {
    if (y < lo_base) {
      steps.push_back(Step::plus_one);
      y = times_minus_phi(y);
    } else if (sign(y) != Sign::positive) {
      break;
    } else if (y < g::inv_phi3()) {
      steps.push_back(Step::fraction);
      y = strip_one(y);
    } else {
      steps.push_back(Step::same);
      y = strip_one(y);
    }
    if (steps.size() > bound)
      throw DepthExceededError("h_eval: recursion depth above " + std::to_string(bound) + " at " +
                               to_string(y0));
  }
  return fold(steps);
}

Ratio k_eval(const GoldenNum& y0, std::optional<std::size_t> max_depth) {
  if (sign(y0) == Sign::zero) throw BreakpointError("k is undefined at 0");
  if (y0 == strip_lo() || y0 == g::inv_phi())
    throw BreakpointError("k is undefined on the boundary of its domain: " + to_string(y0));
  if (y0 < strip_lo() || y0 > g::inv_phi())
    throw OutOfDomainError("k_eval: " + to_string(y0) + " is outside (-1/phi^2, 1/phi)");

  const std::size_t bound = max_depth.value_or(default_depth(y0));
  std::vector<Step> steps;
  GoldenNum y = y0;
  for (;;) {
    if (sign(y) == Sign::negative) {
      steps.push_back(Step::same);
      y = times_minus_phi(y);
    } else if (y < g::inv_phi3()) {
      steps.push_back(Step::plus_one);
      y = times_minus_phi(y);
    } else if (y <= g::inv_phi2()) {
      break;
    } else {
      steps.push_back(Step::fraction);
      y = strip_one(y);
    }
    if (steps.size() > bound)
      throw DepthExceededError("k_eval: recursion depth above " + std::to_string(bound) + " at " +
                               to_string(y0));
  }
  return fold(steps);
}

std::vector<Integer> cocycle_sequence(std::uint64_t n) {
  std::vector<Integer> out;
  out.reserve(n + 1);
  Integer r = 1;
  out.push_back(r);
  GoldenNum y = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const Ratio h = h_eval(y);
    Integer scaled = r * h.num();
    Integer next = scaled / h.den();
    if (next * h.den() != scaled)
      throw std::logic_error("cocycle product is not integral at k = " + std::to_string(k));
    r = std::move(next);
    out.push_back(r);
    y = rotate(y);
  }
  return out;
}

Integer cocycle_r(std::uint64_t n) {
  Ratio r = 1;
  GoldenNum y = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    r = r * h_eval(y);
    y = rotate(y);
  }
  if (!r.is_integer()) throw std::logic_error("cocycle product " + r.str() + " is not an integer");
  return r.num();
}

}  // namespace fibpart
