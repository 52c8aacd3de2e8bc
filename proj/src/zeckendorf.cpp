#include "fibpart/zeckendorf.hpp"

#include <array>
#include <stdexcept>

namespace fibpart {

namespace {

constexpr unsigned kMaxU64Index = 93;

constexpr std::array<std::uint64_t, kMaxU64Index + 1> make_fib_table() {
  std::array<std::uint64_t, kMaxU64Index + 1> t{};
  t[0] = 0;
  t[1] = 1;
  for (unsigned k = 2; k <= kMaxU64Index; ++k) t[k] = t[k - 1] + t[k - 2];
  return t;
}

constexpr auto kFib = make_fib_table();

}  // namespace

ZeckWord::ZeckWord(std::vector<Digit> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) throw std::invalid_argument("Zeckendorf digits must be 0 or 1");
    if (i > 0 && bits_[i] == 1 && bits_[i - 1] == 1)
      throw std::invalid_argument("Zeckendorf word has adjacent ones");
  }
  if (!bits_.empty() && bits_.front() != 1)
    throw std::invalid_argument("Zeckendorf word must start with 1");
}

std::string ZeckWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Digit b : bits_) s += static_cast<char>('0' + b);
  return s;
}

std::uint64_t fib_u64(unsigned k) {
  if (k > kMaxU64Index) throw std::overflow_error("fib_u64 index above 93");
  return kFib[k];
}

Integer fib(unsigned k) {
  if (k == 0) throw std::domain_error("fib index must be >= 1");
  if (k <= kMaxU64Index) return Integer(kFib[k]);
  Integer a = kFib[kMaxU64Index - 1];
  Integer b = kFib[kMaxU64Index];
  for (unsigned i = kMaxU64Index; i < k; ++i) {
    Integer c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

ZeckWord encode(const Integer& n) {
  if (n < 0) throw std::domain_error("encode expects n >= 0");
  if (n == 0) return {};
  // fibs[j] = F_{j+2}; stop once F_{k+2} > n, giving word length k.
  std::vector<Integer> fibs{Integer(1), Integer(2)};
  while (fibs.back() <= n) fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);
  const std::size_t k = fibs.size() - 1;
  std::vector<Digit> bits(k, 0);
  Integer rest = n;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& w = fibs[k - 1 - i];  // F_{k+1-i} for 0-based i
    if (w <= rest) {
      bits[i] = 1;
      rest -= w;
    }
  }
  return ZeckWord(std::move(bits));
}

Integer decode(std::span<const Digit> bits) {
  // Horner-like accumulation from the least significant end.
  Integer total = 0;
  Integer lo = 1;  // F_2
  Integer hi = 2;  // F_3
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] > 1) throw std::invalid_argument("word digits must be 0 or 1");
    if (bits[i]) total += lo;
    Integer next = lo + hi;
    lo = std::move(hi);
    hi = std::move(next);
  }
  return total;
}

std::vector<Digit> parse_word(std::string_view word) {
  std::vector<Digit> bits;
  bits.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("word must contain only 0 and 1");
    bits.push_back(static_cast<Digit>(c - '0'));
  }
  return bits;
}

Integer decode(std::string_view word) {
  const auto bits = parse_word(word);
  return decode(std::span<const Digit>(bits));
}

}  // namespace fibpart
