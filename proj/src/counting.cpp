#include "fibpart/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fibpart/errors.hpp"

namespace fibpart {

CountMatrix CountMatrix::identity() {
  return CountMatrix({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

const CountMatrix& CountMatrix::for_digit(Digit b) {
  static const CountMatrix a0({{{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}});
  static const CountMatrix a1({{{1, 0, 1}, {0, 0, 1}, {0, 0, 0}}});
  if (b > 1) throw std::invalid_argument("digit must be 0 or 1");
  return b ? a1 : a0;
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b) {
  CountMatrix::Entries e{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Integer s = 0;
      for (std::size_t m = 0; m < 3; ++m) s += a.e_[i][m] * b.e_[m][j];
      e[i][j] = std::move(s);
    }
  return CountMatrix(std::move(e));
}

void CountState::apply(Digit b) {
  const CountMatrix& m = CountMatrix::for_digit(b);
  std::array<Integer, 3> next{Integer(0), Integer(0), Integer(0)};
  for (std::size_t i = 0; i < 3; ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j)
      if (m(i, j) != 0) next[j] += row[i] * m(i, j);
  }
  row = std::move(next);
  ++depth;
}

CountState product_state(std::span<const Digit> word) {
  CountState s;
  for (Digit b : word) s.apply(b);
  return s;
}

RPair r_pair(const Integer& n) {
  if (n < 0) throw std::domain_error("r_pair expects n >= 0");
  const ZeckWord w = encode(n);
  const CountState s = product_state(w.bits());
  RPair out{s.current(), std::nullopt};
  if (n > 0) out.previous = s.previous();
  return out;
}

namespace {

struct SubsetCounter {
  std::vector<std::uint64_t> parts;   // ascending distinct Fibonacci values 1, 2, 3, 5, ...
  std::vector<std::uint64_t> prefix;  // prefix[j] = parts[0] + ... + parts[j]

  std::uint64_t count(std::size_t j_plus_one, std::uint64_t rest) const {
    if (rest == 0) return 1;
    if (j_plus_one == 0) return 0;
    const std::size_t j = j_plus_one - 1;
    if (prefix[j] < rest) return 0;
    std::uint64_t total = count(j, rest);
    if (parts[j] <= rest) total += count(j, rest - parts[j]);
    return total;
  }
};

}  // namespace

Integer r_bruteforce(std::uint64_t n, std::uint64_t bound) {
  if (n > bound)
    throw BoundExceededError("r_bruteforce: n = " + std::to_string(n) + " exceeds oracle bound " +
                             std::to_string(bound));
  SubsetCounter c;
  for (unsigned k = 2; fib_u64(k) <= n; ++k) {
    c.parts.push_back(fib_u64(k));
    c.prefix.push_back(c.parts.back() + (c.prefix.empty() ? 0 : c.prefix.back()));
  }
  return Integer(c.count(c.parts.size(), n));
}

SequenceWalker::SequenceWalker(std::uint64_t start) : n_(start) {
  bits_ = encode(Integer(start)).bits();
  states_.assign(1, CountState{});
  rebuild(0);
}

void SequenceWalker::rebuild(std::size_t from) {
  states_.resize(bits_.size() + 1);
  for (std::size_t j = from; j < bits_.size(); ++j) {
    states_[j + 1] = states_[j].then(bits_[j]);
    if (!states_[j + 1].one_sided())
      throw std::logic_error("CountState support is not one-sided at n = " + std::to_string(n_));
  }
}

void SequenceWalker::advance() {
  // Lexicographic successor among words of the same length: set the
  // rightmost 0 whose left neighbour is also 0, clear everything after it.
  std::size_t i = bits_.size();
  bool found = false;
  while (i > 1) {
    --i;
    if (bits_[i] == 0 && bits_[i - 1] == 0) {
      found = true;
      break;
    }
  }
  ++n_;
  if (found) {
    bits_[i] = 1;
    std::fill(bits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, bits_.end(), Digit{0});
    rebuild(i);
  } else {
    // Block boundary: n = F_{k+2} starts the words of length k + 1.
    const std::size_t k = bits_.size() + 1;
    bits_.assign(k, 0);
    bits_[0] = 1;
    rebuild(0);
  }
}

void batch_r(std::uint64_t limit, const std::function<void(std::uint64_t, const Integer&)>& sink) {
  SequenceWalker w;
  sink(0, w.value());
  while (w.index() < limit) {
    w.advance();
    sink(w.index(), w.value());
  }
}

std::vector<Integer> r_values(std::uint64_t from, std::uint64_t to) {
  if (to < from) return {};
  std::vector<Integer> out;
  out.reserve(to - from + 1);
  SequenceWalker w(from);
  out.push_back(w.value());
  while (w.index() < to) {
    w.advance();
    out.push_back(w.value());
  }
  return out;
}

std::vector<Integer> prefix_sums(std::uint64_t H) {
  std::vector<Integer> out;
  out.reserve(H + 1);
  Integer acc = 0;
  batch_r(H, [&](std::uint64_t, const Integer& r) {
    acc += r;
    out.push_back(acc);
  });
  return out;
}

Integer a_of(std::uint64_t H) {
  Integer acc = 0;
  batch_r(H, [&](std::uint64_t, const Integer& r) { acc += r; });
  return acc;
}

}  // namespace fibpart
