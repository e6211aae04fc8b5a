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
#include "doctest.h"
#include "gijswijt/constants.hpp"
#include "golden.hpp"

using namespace gijswijt;

namespace {

Rational decimal(const std::string& s) {
  auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  return Rational(parse_nat(digits), pow_nat(10, s.size() - dot - 1));
}

}  // namespace

TEST_CASE("truncation never rounds") {
  CHECK(truncate_decimal(Rational(2, 3), 3) == "0.666");
  CHECK(truncate_decimal(Rational(7, 2), 2) == "3.50");
  CHECK(truncate_decimal(Rational(1999, 1000), 2) == "1.99");
}

TEST_CASE("reference digits are contained and reproduced") {
  Engine e;
  for (std::uint64_t m = 1; m <= 10; ++m) {
    INFO("m=" << m);
    RatEnclosure nu_e = nu(e, m, 20);
    Rational nu_v = decimal(golden::kNu[m - 1]);
    CHECK(nu_e.width() < Rational(1, pow_nat(10, 20)));
    // The table truncates, so the value lies in [v, v + 10^-20).
    CHECK(nu_e.hi >= nu_v);
    CHECK(nu_e.lo < nu_v + Rational(1, pow_nat(10, 20)));
    CHECK(certified_decimal(e, Constant::Nu, m, 20).digits == golden::kNu[m - 1]);

    RatEnclosure eps_e = epsilon(e, m, 20);
    Rational eps_v = decimal(golden::kEpsilon[m - 1]);
    CHECK(eps_e.width() < Rational(1, pow_nat(10, 20)));
    CHECK(eps_e.hi >= eps_v);
    CHECK(eps_e.lo < eps_v + Rational(1, pow_nat(10, 20)));
    CHECK(certified_decimal(e, Constant::Epsilon, m, 20).digits == golden::kEpsilon[m - 1]);
  }
}

TEST_CASE("epsilon stays below 3.5") {
  Engine e;
  for (std::uint64_t m = 1; m <= 20; ++m) CHECK(epsilon(e, m, 2).hi < Rational(7, 2));
}

TEST_CASE("enclosures nest as precision grows") {
  Engine e;
  for (Constant c : {Constant::Nu, Constant::Epsilon}) {
    for (std::uint64_t m = 1; m <= 4; ++m) {
      RatEnclosure prev = enclose(e, c, m, 3);
      for (unsigned d : {6u, 12u, 25u, 40u}) {
        RatEnclosure next = enclose(e, c, m, d);
        CHECK(next.lo >= prev.lo);
        CHECK(next.hi <= prev.hi);
        CHECK(next.width() < Rational(1, pow_nat(10, d)));
        prev = next;
      }
    }
  }
}

TEST_CASE("epsilon partial quotients increase towards epsilon") {
  Engine e;
  for (std::uint64_t m = 1; m <= 4; ++m) {
    RatEnclosure eps = epsilon(e, m, 30);
    Rational prev = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) {
      Rational q(e.lengths().beta(m, n), pow_nat(m + 1, n - 1));
      CHECK(q >= prev);
      CHECK(q < eps.hi);
      prev = q;
    }
  }
}

TEST_CASE("tail bound dominates the actual tail") {
  Engine e;
  for (std::uint64_t m = 1; m <= 3; ++m) {
    for (std::uint64_t n : {1, 2, 5, 17, 40}) {
      Rational actual = 0;
      for (std::uint64_t i = n; i < n + 400; ++i) {
        actual += Rational(e.lengths().sigma(m, i), pow_nat(m + 1, i));
      }
      CHECK(actual < epsilon_tail_bound(m, n));
    }
  }
}

TEST_CASE("epsilon approximants") {
  Engine e;
  Approximant a = approximant(e, Constant::Epsilon, 1, 4);
  CHECK(a.numerator == 219);
  CHECK(a.denominator == 63);
  CHECK(a.sign == 1);
  Approximant b = approximant(e, Constant::Epsilon, 2, 4);
  CHECK(Rational(b.numerator, b.denominator) == Rational(41, 26));
  CHECK(b.denominator == 26);
  for (auto* ap : {&a, &b}) {
    RatEnclosure eps = epsilon(e, ap->m, 40);
    Rational f(ap->numerator, ap->denominator);
    CHECK(eps.lo > f);
    CHECK(eps.hi - f < ap->gap_bound);
  }
  CHECK_THROWS_AS(approximant(e, Constant::Epsilon, 1, 2), InvalidArgument);
}

// Enough decimals to resolve a distance the size of the gap bound.
unsigned resolving(const Approximant& a) {
  return static_cast<unsigned>(digit_count(10, ceil_of(1 / a.gap_bound))) + 10;
}

TEST_CASE("nu approximants") {
  Engine e;
  Approximant a = approximant(e, Constant::Nu, 2, 5);
  CHECK(a.sign == -1);
  RatEnclosure v = nu(e, 2, resolving(a));
  Rational f(a.numerator, a.denominator);
  CHECK(v.hi < f);
  CHECK(f - v.lo < a.gap_bound);
  Approximant b = approximant(e, Constant::Nu, 1, 5);
  RatEnclosure v1 = nu(e, 1, resolving(b));
  Rational f1(b.numerator, b.denominator);
  CHECK(b.sign == -1);
  CHECK(v1.hi < f1);
  CHECK(f1 - v1.lo < b.gap_bound);
}
