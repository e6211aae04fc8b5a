/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "gijswijt/digits.hpp"

using namespace gijswijt;

namespace {

// r_m[2a-b+1, a] == r_m[a+1, b], 1-indexed, straight from the valuations.
bool ruler_square(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  if (2 * a < b) return false;
  for (std::uint64_t i = 0; i < b - a; ++i) {
    if (ord(m, 2 * a - b + 1 + i) != ord(m, a + 1 + i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ord") {
  CHECK(ord(2, std::uint64_t{12}) == 2);
  CHECK(ord(3, std::uint64_t{9}) == 2);
  CHECK(ord(5, std::uint64_t{7}) == 0);
  CHECK(ord(2, pow_nat(2, 300) * 3) == 300);
  CHECK_THROWS_AS(ord(2, std::uint64_t{0}), InvalidArgument);
  CHECK_THROWS_AS(ord(2, Nat(0)), InvalidArgument);
}

TEST_CASE("maxdigit") {
  CHECK(maxdigit(2, 7) == 1);
  CHECK(maxdigit(3, 5) == 2);
  CHECK(maxdigit(10, 907) == 9);
  CHECK(maxdigit(100, 9901) == 99);
}

TEST_CASE("chi") {
  CHECK(chi(2, 5) == 10);
  CHECK(chi(2, 2) == 3);
  for (std::uint64_t m = 2; m <= 6; ++m) CHECK(chi(m, 0) == 0);
}

TEST_CASE("digit vectors round trip") {
  std::mt19937_64 rng(5);
  for (std::uint64_t base : {2, 3, 7, 10, 36, 37, 1000}) {
    for (int i = 0; i < 50; ++i) {
      Nat n = Nat(rng()) * rng() + rng() % 5;
      DigitVector d = to_digits(base, n);
      CHECK(d.value() == n);
      CHECK(from_digits(base, d.digits) == n);
      for (auto x : d.digits) CHECK(x < base);
      if (!d.digits.empty()) CHECK(d.digits.back() != 0);
    }
  }
  CHECK(to_digits(3, 0).digits.empty());
  CHECK(to_digits(2, 6).digits == std::vector<std::uint64_t>{0, 1, 1});
  CHECK_THROWS_AS(to_digits(1, 5), InvalidArgument);
}

TEST_CASE("ruler prefixes") {
  CHECK(ruler_prefix(2, 8) == std::vector<std::uint64_t>{0, 1, 0, 2, 0, 1, 0, 3});
  CHECK(ruler_prefix(3, 9) == std::vector<std::uint64_t>{0, 0, 1, 0, 0, 1, 0, 0, 2});
  CHECK(ruler_prefix(2, 0).empty());
}

TEST_CASE("pair set examples") {
  CHECK(in_pair_set(3, 1, 2));
  CHECK_FALSE(in_pair_set(3, 3, 1));
  CHECK_FALSE(in_pair_set(3, 1, 4));
  CHECK_FALSE(in_pair_set(3, 0, 1));
}

TEST_CASE("pair set agrees with the ruler square test") {
  for (std::uint64_t m = 2; m <= 5; ++m) {
    for (std::uint64_t b = 2; b <= 200; ++b) {
      for (std::uint64_t a = 1; a < b; ++a) {
        INFO("m=" << m << " a=" << a << " b=" << b);
        REQUIRE(in_pair_set(m, a, b) == ruler_square(m, a, b));
      }
    }
  }
}

TEST_CASE("chi preserves order, digits, valuations and pairs") {
  for (std::uint64_t m = 2; m <= 5; ++m) {
    Nat prev = -1;
    for (std::uint64_t n = 1; n <= 600; ++n) {
      Nat c = chi(m, n);
      CHECK(c > prev);
      prev = c;
      CHECK(maxdigit(m + 1, c) == maxdigit(m, n));
      CHECK(ord(m + 1, c) == ord(m, n));
    }
    for (std::uint64_t b = 2; b <= 80; ++b) {
      for (std::uint64_t a = 1; a < b; ++a) {
        CHECK(in_pair_set(m + 1, chi(m, a), chi(m, b)) == in_pair_set(m, a, b));
      }
    }
  }
}

TEST_CASE("ruler self-similarity") {
  // r_m[1, a_x m^(x-1)] is a_x copies of r_m[1, m^(x-1)].
  for (std::uint64_t m = 2; m <= 5; ++m) {
    auto r = ruler_prefix(m, 10000);
    for (std::uint64_t unit = 1; unit * m <= 10000; unit *= m) {
      for (std::uint64_t top = 1; top < m && top * unit <= 10000; ++top) {
        for (std::uint64_t i = 0; i < top * unit; ++i) REQUIRE(r[i] == r[i % unit]);
      }
    }
  }
}
