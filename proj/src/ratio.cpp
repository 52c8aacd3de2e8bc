#include "fibpart/ratio.hpp"

#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace fibpart {

Ratio::Ratio(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("ratio with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Integer g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::coprime(Integer num, Integer den) {
  Ratio r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

Ratio Ratio::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return Ratio(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return Ratio(parse_integer(digits), pow10(static_cast<unsigned>(frac.size())));
  }
  return Ratio(parse_integer(text));
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Ratio operator-(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Ratio operator*(const Ratio& a, const Ratio& b) { return Ratio(a.num_ * b.num_, a.den_ * b.den_); }
Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.num_ == 0) throw std::domain_error("ratio division by zero");
  return Ratio(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const Integer l = a.num_ * b.den_;
  const Integer r = b.num_ * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Ratio::to_double() const {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  return (Dec(num_) / Dec(den_)).convert_to<double>();
}

std::string Ratio::str() const { return to_string(num_) + "/" + to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

std::string to_significant(const Integer& num, const Integer& den, unsigned digits) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec v = Dec(num) / Dec(den);
  return v.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

}  // namespace fibpart
