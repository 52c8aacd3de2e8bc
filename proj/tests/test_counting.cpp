#include <doctest.h>

#include <random>
#include <vector>

#include "fibpart/counting.hpp"
#include "fibpart/errors.hpp"

using namespace fibpart;

namespace {

const std::vector<int> kPrefix = {1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3};

// Independent oracle: 0/1 knapsack count over the distinct Fibonacci values.
std::vector<std::uint64_t> knapsack_counts(std::size_t limit) {
  std::vector<std::uint64_t> ways(limit + 1, 0);
  ways[0] = 1;
  std::uint64_t a = 1, b = 2;
  while (a <= limit) {
    for (std::size_t s = limit; s >= a; --s) ways[s] += ways[s - a];
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return ways;
}

}  // namespace

TEST_CASE("transfer matrices") {
  const auto& a0 = CountMatrix::for_digit(0);
  const auto& a1 = CountMatrix::for_digit(1);
  const int e0[3][3] = {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}};
  const int e1[3][3] = {{1, 0, 1}, {0, 0, 1}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(a0(i, j) == e0[i][j]);
      CHECK(a1(i, j) == e1[i][j]);
    }
  CHECK(a1(2, 0) + a1(2, 1) + a1(2, 2) == 0);
  CHECK(CountMatrix::identity() * a0 == a0);
}

TEST_CASE("row updates agree with matrix products") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Digit> word(1 + rng() % 30);
    for (auto& d : word) d = rng() & 1u;
    CountMatrix m = CountMatrix::identity();
    for (Digit d : word) m = m * CountMatrix::for_digit(d);
    const CountState s = product_state(word);
    for (int j = 0; j < 3; ++j) CHECK(s.row[j] == m(0, j));
    CHECK(s.depth == word.size());
  }
}

TEST_CASE("r_pair") {
  auto p = r_pair(6);
  CHECK(p.current == 2);
  CHECK(p.previous == Integer(2));
  p = r_pair(0);
  CHECK(p.current == 1);
  CHECK(!p.previous.has_value());
  p = r_pair(12);
  CHECK(p.current == 1);
  CHECK(p.previous == Integer(3));
}

TEST_CASE("brute force oracle") {
  CHECK(r_bruteforce(6) == 2);
  CHECK(r_bruteforce(0) == 1);
  CHECK(r_bruteforce(13) == 3);
  CHECK_THROWS_AS(r_bruteforce(10'001), BoundExceededError);
  CHECK(r_bruteforce(20'000, 20'000) == r_pair(20'000).current);
  const auto ways = knapsack_counts(3000);
  for (std::uint64_t n = 0; n <= 3000; ++n) REQUIRE(r_bruteforce(n) == ways[n]);
}

TEST_CASE("batch enumeration") {
  std::vector<Integer> got;
  batch_r(13, [&](std::uint64_t n, const Integer& r) {
    CHECK(n == got.size());
    got.push_back(r);
  });
  REQUIRE(got.size() == kPrefix.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == kPrefix[i]);

  int calls = 0;
  batch_r(0, [&](std::uint64_t n, const Integer& r) {
    CHECK(n == 0);
    CHECK(r == 1);
    ++calls;
  });
  CHECK(calls == 1);
}

TEST_CASE("oracle equivalence up to 1e4") {
  const auto batch = r_values(0, 10'000);
  for (std::uint64_t n = 0; n <= 10'000; ++n) {
    const Integer brute = r_bruteforce(n);
    REQUIRE(r_pair(n).current == brute);
    REQUIRE(batch[n] == brute);
  }
}

TEST_CASE("pair consistency, positivity and one-sided support") {
  const auto batch = r_values(0, 100'000);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const RPair p = r_pair(n);
    REQUIRE(p.previous.has_value());
    REQUIRE(*p.previous == batch[n - 1]);
    REQUIRE(p.current == batch[n]);
    REQUIRE(p.current >= 1);
  }
  for (std::uint64_t n = 0; n <= 20'000; ++n) {
    CountState s;
    const ZeckWord w = encode(n);
    for (Digit d : w.bits()) {
      s.apply(d);
      REQUIRE(s.one_sided());
    }
  }
}

TEST_CASE("non-Zeckendorf words give different products") {
  const auto z = product_state(parse_word("1001"));
  const auto other = product_state(parse_word("0111"));
  CHECK(decode("1001") == decode("0111"));
  CHECK(z.current() == 2);
  CHECK(other.current() == 1);
  CHECK(z.current() != other.current());
}

TEST_CASE("walker started anywhere matches r_pair") {
  for (std::uint64_t start : {0ULL, 1ULL, 4ULL, 54ULL, 55ULL, 1000ULL, 46367ULL}) {
    SequenceWalker w(start);
    for (int i = 0; i < 500; ++i) {
      const RPair p = r_pair(w.index());
      REQUIRE(w.value() == p.current);
      if (w.index() > 0) REQUIRE(w.previous() == *p.previous);
      REQUIRE(w.word() == encode(w.index()).bits());
      w.advance();
    }
  }
}

TEST_CASE("prefix sums") {
  CHECK(a_of(0) == 1);
  CHECK(a_of(13) == 25);
  const auto sums = prefix_sums(5000);
  for (std::uint64_t h = 1; h <= 5000; ++h) REQUIRE(sums[h] > sums[h - 1]);
  CHECK(sums[5000] == a_of(5000));
}

TEST_CASE("R at Fibonacci numbers is floor(k/2)") {
  for (unsigned k = 2; k <= 25; ++k) CHECK(r_bruteforce(fib_u64(k), 1'000'000) == k / 2);
  CHECK(r_pair(fib(300)).current == 150);
}
