#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fibpart/integer.hpp"

namespace fibpart {

/// Reduced fraction num/den with den > 0.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(Integer num, Integer den = 1);  // NOLINT: implicit from integers
  Ratio(int num) : num_(num), den_(1) {}  // NOLINT

  /// Skips the gcd; caller guarantees gcd(num, den) = 1 and den > 0.
  static Ratio coprime(Integer num, Integer den);
  /// Accepts "a/b", "a" or a plain decimal such as "0.25".
  static Ratio parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

  double to_double() const;
  /// Always "num/den", e.g. "1/1".
  std::string str() const;

 private:
  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// Decimal rendering of num/den with the given number of significant digits.
std::string to_significant(const Integer& num, const Integer& den, unsigned digits);

}  // namespace fibpart
