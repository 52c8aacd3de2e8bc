#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibpart/integer.hpp"

namespace fibpart {

using Digit = std::uint8_t;

/// Zeckendorf code of a nonnegative integer: most significant bit first,
/// no two adjacent ones, leading one. The empty word codes 0.
///
/// A word of length k weights position i (1-based) by F_{k+2-i}, so the
/// parts range over F_2..F_{k+1}.
class ZeckWord {
 public:
  ZeckWord() = default;
  /// Throws std::invalid_argument if `bits` is not a Zeckendorf word.
  explicit ZeckWord(std::vector<Digit> bits);

  const std::vector<Digit>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::string str() const;

  friend bool operator==(const ZeckWord&, const ZeckWord&) = default;

 private:
  std::vector<Digit> bits_;
};

/// F_1 = F_2 = 1, F_{k+1} = F_k + F_{k-1}. Requires k >= 1.
Integer fib(unsigned k);
/// Same for k <= 93, where the value still fits in 64 bits.
std::uint64_t fib_u64(unsigned k);

/// Greedy Zeckendorf coding of n >= 0.
ZeckWord encode(const Integer& n);

/// Sum of a_i F_{k+2-i} over an arbitrary binary word (adjacent ones and
/// leading zeros allowed).
Integer decode(std::span<const Digit> bits);
/// Same for a word written as a string of '0' and '1'.
Integer decode(std::string_view word);

/// Parses a "0"/"1" string into digits; throws std::invalid_argument.
std::vector<Digit> parse_word(std::string_view word);

}  // namespace fibpart
