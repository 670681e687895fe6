#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "betaseq/betaseq.hpp"
#include "testutil.hpp"

using namespace betaseq;

TEST_CASE("successor examples") {
  auto fib = NumerationSystem::build({1, 1}, 12);
  CHECK(successor(DigitString{1, 0, 1}, fib) == DigitString{0, 0, 0, 1});
  CHECK(successor(DigitString{}, fib) == DigitString{1});

  auto s101 = NumerationSystem::build({1, 0, 1}, 10);
  CHECK(successor(DigitString{1, 0, 0, 1}, s101) == DigitString{0, 1, 0, 1});
}

TEST_CASE("successor input validation") {
  auto fib = NumerationSystem::build({1, 1}, 6);
  CHECK_THROWS_AS(successor(DigitString{1, 1}, fib), std::invalid_argument);
  // G_6 = 21; stepping to the top value overflows the precomputed range
  DigitString top = greedy_expansion(fib.base_values().back() - 1, fib);
  CHECK_THROWS_AS(successor(top, fib), std::out_of_range);
}

TEST_CASE("odometer coherence with the greedy oracle") {
  for (const auto& a : testutil::shipped_coeffs()) {
    auto sys = NumerationSystem::build_to_cover(a, 100'002);
    DigitString cur;  // expansion of 0
    for (std::int64_t n = 0; n < 100'000; ++n) {
      DigitString next = successor(cur, sys);
      if (next != greedy_expansion(n + 1, sys)) {
        FAIL("successor(greedy(" << n << ")) != greedy(" << n + 1 << ") in " << sys.name());
      }
      if (!is_admissible(next, sys)) {
        FAIL("successor output inadmissible at n=" << n << " in " << sys.name());
      }
      if (expansion_value(next, sys) != n + 1) {
        FAIL("value increment broke at n=" << n << " in " << sys.name());
      }
      cur = std::move(next);
    }
  }
}

TEST_CASE("orbit streaming") {
  auto fib = NumerationSystem::build({1, 1}, 10);
  std::vector<DigitString> got;
  for (const DigitString& ds : orbit(DigitString{}, fib, 3)) got.push_back(ds);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == DigitString{});
  CHECK(got[1] == DigitString{1});
  CHECK(got[2] == DigitString{0, 1});

  got.clear();
  for (const DigitString& ds : orbit(DigitString{1, 0, 1}, fib, 1)) got.push_back(ds);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == DigitString{1, 0, 1});

  auto s22 = NumerationSystem::build({2, 2}, 6);
  got.clear();
  for (const DigitString& ds : orbit(DigitString{}, s22, 4)) got.push_back(ds);
  REQUIRE(got.size() == 4);
  CHECK(got[0] == DigitString{});
  CHECK(got[1] == DigitString{1});
  CHECK(got[2] == DigitString{2});
  CHECK(got[3] == DigitString{0, 1});

  CHECK_THROWS_AS(orbit(DigitString{}, fib, 0), std::invalid_argument);
}
