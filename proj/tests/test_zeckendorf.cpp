#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fibpart/zeckendorf.hpp"

using namespace fibpart;

TEST_CASE("fibonacci numbers") {
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(30) == 832040);
  CHECK(fib(100) == Integer("354224848179261915075"));
  CHECK(fib_u64(93) == 12200160415121876738ULL);
  CHECK_THROWS(fib_u64(94));
  CHECK_THROWS(fib(0));
  for (unsigned k = 3; k <= 200; ++k) CHECK(fib(k) == fib(k - 1) + fib(k - 2));
}

TEST_CASE("encode") {
  CHECK(encode(0).str().empty());
  CHECK(encode(0).empty());
  CHECK(encode(1).str() == "1");
  CHECK(encode(6).str() == "1001");
  CHECK(encode(12).str() == "10101");
  CHECK(encode(fib(50)).size() == 49);
}

TEST_CASE("decode accepts arbitrary binary words") {
  CHECK(decode("1001") == 6);
  CHECK(decode("0111") == 6);
  CHECK(decode("") == 0);
  CHECK(decode("11") == 3);
  CHECK(decode("0001001") == 6);
  CHECK_THROWS_AS(parse_word("10a"), std::invalid_argument);
}

TEST_CASE("ZeckWord rejects malformed words") {
  CHECK_THROWS_AS(ZeckWord(parse_word("11")), std::invalid_argument);
  CHECK_THROWS_AS(ZeckWord(parse_word("01")), std::invalid_argument);
  CHECK_THROWS_AS(ZeckWord(parse_word("1012")), std::invalid_argument);
  CHECK_NOTHROW(ZeckWord(parse_word("1001")));
  CHECK(ZeckWord(parse_word("101")).str() == "101");
}

TEST_CASE("round trip and length for n up to 1e5") {
  for (unsigned n = 0; n <= 100'000; ++n) {
    const ZeckWord w = encode(n);
    const auto& b = w.bits();
    for (std::size_t i = 1; i < b.size(); ++i) REQUIRE(!(b[i] == 1 && b[i - 1] == 1));
    REQUIRE(decode(b) == n);
    if (n >= 1) {
      // Leading weight is F_{k+1}.
      const auto k = static_cast<unsigned>(b.size());
      REQUIRE(fib(k + 1) <= n);
      REQUIRE(n < fib(k + 2));
    }
  }
}

TEST_CASE("decode is monotone on padded Zeckendorf words") {
  const std::size_t len = 14;
  Integer prev = -1;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::vector<Digit> bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[i] = (mask >> (len - 1 - i)) & 1u;
    const Integer v = decode(bits);
    REQUIRE(v > prev);
    prev = v;
  }
  CHECK(prev == fib(len + 2) - 1);
}

TEST_CASE("decode is not monotone once adjacent ones are allowed") {
  // 0111 < 1000 numerically, yet they decode to 6 and 5.
  CHECK(decode("0111") > decode("1000"));
}
