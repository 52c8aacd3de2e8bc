#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fibpart/integer.hpp"
#include "fibpart/zeckendorf.hpp"

namespace fibpart {

/// 3x3 nonnegative integer matrix. States are labelled v1 = 0, v2 = phi,
/// v3 = phi^2: entry (i, j) is 1 when a digit moves the partial difference
/// from v_i to v_j.
class CountMatrix {
 public:
  using Entries = std::array<std::array<Integer, 3>, 3>;

  explicit CountMatrix(Entries e) : e_(std::move(e)) {}
  static CountMatrix identity();
  /// A_0 = [[1,0,0],[1,0,1],[0,1,0]] and A_1 = [[1,0,1],[0,0,1],[0,0,0]].
  static const CountMatrix& for_digit(Digit b);

  const Integer& operator()(std::size_t i, std::size_t j) const { return e_[i][j]; }
  friend CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);
  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  Entries e_;
};

/// Running row vector (1 0 0) A_{b_1} ... A_{b_j}.
///
/// After a whole Zeckendorf word of n, row[0] = R(n) and row[1] + row[2]
/// = R(n-1); at most one of row[1], row[2] is nonzero.
struct CountState {
  std::array<Integer, 3> row{Integer(1), Integer(0), Integer(0)};
  std::size_t depth = 0;

  void apply(Digit b);
  CountState then(Digit b) const {
    CountState s = *this;
    s.apply(b);
    return s;
  }
  bool one_sided() const { return row[1] == 0 || row[2] == 0; }
  const Integer& current() const { return row[0]; }
  Integer previous() const { return row[1] + row[2]; }
};

/// Product state over an arbitrary binary word. Only Zeckendorf words yield
/// R(n) and R(n-1).
CountState product_state(std::span<const Digit> word);

struct RPair {
  Integer current;                  ///< R(n)
  std::optional<Integer> previous;  ///< R(n-1), absent for n = 0
};

/// R(n) and R(n-1) from the transfer matrices over the Zeckendorf word of n.
RPair r_pair(const Integer& n);

inline constexpr std::uint64_t kDefaultOracleBound = 10'000;

/// Subset-sum count over {F_2, ..., F_m}; the slow reference path.
/// Throws BoundExceededError when n > bound.
Integer r_bruteforce(std::uint64_t n, std::uint64_t bound = kDefaultOracleBound);

/// Depth-first walk over the no-adjacent-ones words in numeric order.
///
/// Keeps the CountState of every prefix on a stack; moving to n + 1 only
/// recomputes the suffix that changed, which is O(1) amortized.
class SequenceWalker {
 public:
  explicit SequenceWalker(std::uint64_t start = 0);

  std::uint64_t index() const { return n_; }
  const Integer& value() const { return states_.back().current(); }
  /// R(index - 1); zero at index 0.
  Integer previous() const { return n_ == 0 ? Integer(0) : states_.back().previous(); }
  const CountState& state() const { return states_.back(); }
  const std::vector<Digit>& word() const { return bits_; }

  void advance();

 private:
  void rebuild(std::size_t from);

  std::uint64_t n_ = 0;
  std::vector<Digit> bits_;
  std::vector<CountState> states_;
};

/// Calls sink(n, R(n)) for n = 0..limit in increasing order.
void batch_r(std::uint64_t limit, const std::function<void(std::uint64_t, const Integer&)>& sink);

/// R(from..to) inclusive.
std::vector<Integer> r_values(std::uint64_t from, std::uint64_t to);

/// A(H) = R(0) + ... + R(H).
Integer a_of(std::uint64_t H);

/// A(0..H) in one pass.
std::vector<Integer> prefix_sums(std::uint64_t H);

}  // namespace fibpart
