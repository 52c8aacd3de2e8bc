#include "fibpart/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace fibpart {

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

Integer floor_div(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("division by zero");
  Integer q = n / d;
  Integer r = n - q * d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  Integer m = abs(n);
  return boost::multiprecision::msb(m) + 1;
}

Integer pow10(unsigned exponent) {
  return boost::multiprecision::pow(Integer(10), exponent);
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& n) { return n.str(); }

std::uint64_t to_u64(const Integer& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
  return n.convert_to<std::uint64_t>();
}

}  // namespace fibpart
