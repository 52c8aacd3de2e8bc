#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibpart/golden.hpp"
#include "fibpart/integer.hpp"
#include "fibpart/ratio.hpp"

namespace fibpart {

/// Lattice point (x_n, y_n) of the orbit strip. x = p + n phi and y is its
/// conjugate, stored as the GoldenNum whose real value is y_n.
struct OrbitPoint {
  Integer n;
  GoldenNum x;
  GoldenNum y;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

/// y in [-1/phi^2, 1/phi).
bool in_strip(const GoldenNum& y);

/// Rotation by 1/phi^2 on [-1/phi^2, 1/phi): adds 1/phi^2 below 1/phi^3,
/// adds 1/phi^2 - 1 from 1/phi^3 on. Throws OutOfDomainError off the strip.
GoldenNum rotate(const GoldenNum& y);
/// Inverse rotation; same domain.
GoldenNum rotate_inverse(const GoldenNum& y);

/// Direct O(1) access: the unique lattice point of the strip with phi
/// coefficient n.
OrbitPoint orbit_point(const Integer& n);

/// (x, y) -> (x + 1 + phi, y + 1 + psi) when y < 1/phi^3, else (x + phi, y + psi).
OrbitPoint successor(const OrbitPoint& pt);

/// (x - y) / sqrt5, which is the phi coefficient of x. Throws
/// InvalidPointError unless y = conjugate(x), y is in the strip and the
/// index is nonnegative.
Integer g_index(const GoldenNum& x, const GoldenNum& y);

/// h(y) for y in (-1/phi^2, 1/phi^3) U (1/phi^3, 1/phi), by unwinding the
/// functional equation down to the plateau [-1/phi^4, 0].
///
/// `max_depth` defaults to 4 * (coefficient bit length) + 64. On orbit
/// points the result is R(n+1)/R(n).
Ratio h_eval(const GoldenNum& y, std::optional<std::size_t> max_depth = std::nullopt);

/// k(y) = h(T^{-1} y) for y in (-1/phi^2, 0) U (0, 1/phi), base value 1 on
/// [1/phi^3, 1/phi^2]. On orbit points k(y_n) = R(n)/R(n-1).
Ratio k_eval(const GoldenNum& y, std::optional<std::size_t> max_depth = std::nullopt);

/// R(n) as the telescoping product of h along the orbit of 0.
Integer cocycle_r(std::uint64_t n);
/// R(0..n) along the same product, one rotation step per term.
std::vector<Integer> cocycle_sequence(std::uint64_t n);

/// -phi * a.
GoldenNum times_minus_phi(const GoldenNum& a);

}  // namespace fibpart
