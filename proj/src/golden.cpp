#include "fibpart/golden.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace fibpart {

GoldenNum GoldenNum::phi_pow(unsigned k) {
  GoldenNum r{1, 0};
  const GoldenNum f = phi();
  for (unsigned i = 0; i < k; ++i) r *= f;
  return r;
}

GoldenNum GoldenNum::inv_phi_pow(unsigned k) {
  GoldenNum r{1, 0};
  for (unsigned i = 0; i < k; ++i) r *= golden::inv_phi();
  return r;
}

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

// (p + q phi)(r + s phi) = (pr + qs) + (ps + qr + qs) phi
GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
  Integer qs = q_ * o.q_;
  Integer np = p_ * o.p_ + qs;
  Integer nq = p_ * o.q_ + q_ * o.p_ + qs;
  p_ = std::move(np);
  q_ = std::move(nq);
  return *this;
}

// p + q phi = (A + B sqrt5) / 2 with A = 2p + q, B = q.
Sign sign(const GoldenNum& a) {
  const Integer A = 2 * a.p() + a.q();
  const Integer& B = a.q();
  const int sa = A.sign();
  const int sb = B.sign();
  if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? Sign::zero : Sign::positive;
  if (sa <= 0 && sb <= 0) return Sign::negative;
  const Integer a2 = A * A;
  const Integer b2 = 5 * B * B;
  if (sa > 0) return a2 > b2 ? Sign::positive : Sign::negative;
  return b2 > a2 ? Sign::positive : Sign::negative;
}

std::strong_ordering operator<=>(const GoldenNum& a, const GoldenNum& b) {
  switch (sign(a - b)) {
    case Sign::negative:
      return std::strong_ordering::less;
    case Sign::zero:
      return std::strong_ordering::equal;
    default:
      return std::strong_ordering::greater;
  }
}

namespace {

// floor(A + B sqrt5); 5 B^2 is never a perfect square unless B == 0.
Integer floor_with_sqrt5(const Integer& A, const Integer& B) {
  if (B >= 0) return A + isqrt(5 * B * B);
  return A - isqrt(5 * B * B) - 1;
}

}  // namespace

Integer floor_mul_psi(const Integer& n) {
  if (n < 0) throw std::domain_error("floor_mul_psi expects n >= 0");
  // n psi = (n - n sqrt5) / 2
  return floor_div(floor_with_sqrt5(n, -n), 2);
}

Integer floor_scaled(const GoldenNum& a, const Integer& scale) {
  const Integer A = scale * (2 * a.p() + a.q());
  const Integer B = scale * a.q();
  return floor_div(floor_with_sqrt5(A, B), 2);
}

std::string to_decimal(const GoldenNum& a, unsigned digits) {
  const Integer scale = pow10(digits);
  // round(scale * a) = floor((scale (2p+q) + 1 + scale q sqrt5) / 2); no ties occur
  // because the value scale * a is either an integer or irrational.
  const Integer A = scale * (2 * a.p() + a.q()) + 1;
  const Integer B = scale * a.q();
  const Integer m = floor_div(floor_with_sqrt5(A, B), 2);
  const bool negative = m < 0;
  std::string body = to_string(abs(m));
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  return out;
}

double to_double(const GoldenNum& a) {
  // Scale so that floor(scale * a) carries far more bits than a double keeps.
  const std::size_t magnitude = std::max(bit_length(a.p()), bit_length(a.q()));
  const long shift = 80 + static_cast<long>(magnitude);
  const Integer m = floor_scaled(a, Integer(1) << shift);
  if (m == 0) return 0.0;
  Integer mag = abs(m);
  const long excess = static_cast<long>(bit_length(mag)) - 62;
  long exponent = -shift;
  if (excess > 0) {
    mag >>= excess;
    exponent += excess;
  }
  const double v = std::ldexp(mag.convert_to<double>(), static_cast<int>(exponent));
  return m < 0 ? -v : v;
}

std::string to_string(const GoldenNum& a) {
  const Integer& p = a.p();
  const Integer& q = a.q();
  if (q == 0) return to_string(p);
  std::string out;
  if (p != 0) out = to_string(p);
  if (q < 0) {
    out += '-';
  } else if (p != 0) {
    out += '+';
  }
  const Integer mag = abs(q);
  if (mag != 1) out += to_string(mag);
  out += "phi";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GoldenNum& a) { return os << to_string(a); }

}  // namespace fibpart
