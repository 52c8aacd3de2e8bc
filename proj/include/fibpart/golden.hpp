#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "fibpart/integer.hpp"

namespace fibpart {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact element p + q*phi of Z[phi], phi^2 = phi + 1.
///
/// The representation is canonical: two values are equal iff both
/// coefficients match. The conjugate embedding phi -> psi = 1 - phi is
/// `conjugate()`; a value whose real number is a psi-side coordinate is
/// simply another GoldenNum, so every comparison happens on one number line.
class GoldenNum {
 public:
  GoldenNum() = default;
  GoldenNum(Integer p, Integer q = 0) : p_(std::move(p)), q_(std::move(q)) {}  // NOLINT: implicit from integers
  GoldenNum(int p) : p_(p) {}                                                   // NOLINT

  static GoldenNum phi() { return {0, 1}; }
  /// phi^k for k >= 0.
  static GoldenNum phi_pow(unsigned k);
  /// 1/phi^k for k >= 0.
  static GoldenNum inv_phi_pow(unsigned k);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  GoldenNum conjugate() const { return {p_ + q_, -q_}; }

  GoldenNum& operator+=(const GoldenNum& o);
  GoldenNum& operator-=(const GoldenNum& o);
  GoldenNum& operator*=(const GoldenNum& o);

  friend GoldenNum operator+(GoldenNum a, const GoldenNum& b) { return a += b; }
  friend GoldenNum operator-(GoldenNum a, const GoldenNum& b) { return a -= b; }
  friend GoldenNum operator*(GoldenNum a, const GoldenNum& b) { return a *= b; }
  friend GoldenNum operator-(const GoldenNum& a) { return {-a.p_, -a.q_}; }

  friend bool operator==(const GoldenNum& a, const GoldenNum& b) = default;
  friend std::strong_ordering operator<=>(const GoldenNum& a, const GoldenNum& b);

 private:
  Integer p_ = 0;
  Integer q_ = 0;
};

/// Exact sign of the real number p + q*phi.
Sign sign(const GoldenNum& a);

inline GoldenNum add(const GoldenNum& a, const GoldenNum& b) { return a + b; }
inline GoldenNum mul(const GoldenNum& a, const GoldenNum& b) { return a * b; }
inline GoldenNum neg(const GoldenNum& a) { return -a; }
inline GoldenNum conjugate(const GoldenNum& a) { return a.conjugate(); }

/// floor(n * psi) for n >= 0, via the integer square root of 5 n^2.
Integer floor_mul_psi(const Integer& n);

/// floor(scale * a) for scale > 0.
Integer floor_scaled(const GoldenNum& a, const Integer& scale);

/// Correctly rounded decimal rendering with `digits` places after the point.
std::string to_decimal(const GoldenNum& a, unsigned digits);

/// Nearest double; exact up to the final rounding even under cancellation.
double to_double(const GoldenNum& a);

/// Human readable form such as "2-phi", "-3+2phi", "0".
std::string to_string(const GoldenNum& a);
std::ostream& operator<<(std::ostream& os, const GoldenNum& a);

/// Frequently used constants.
namespace golden {
inline const GoldenNum& inv_phi() {
  static const GoldenNum v{-1, 1};
  return v;
}
inline const GoldenNum& inv_phi2() {
  static const GoldenNum v{2, -1};
  return v;
}
inline const GoldenNum& inv_phi3() {
  static const GoldenNum v{-3, 2};
  return v;
}
inline const GoldenNum& inv_phi4() {
  static const GoldenNum v{5, -3};
  return v;
}
inline const GoldenNum& inv_phi5() {
  static const GoldenNum v{-8, 5};
  return v;
}
}  // namespace golden

}  // namespace fibpart
