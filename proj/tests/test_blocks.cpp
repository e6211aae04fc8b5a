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
#include <algorithm>
#include <thread>

#include "doctest.h"
#include "gijswijt/blocks.hpp"
#include "gijswijt/digits.hpp"
#include "gijswijt/engine.hpp"

using namespace gijswijt;

namespace {

std::string word(WordBuilder& wb, std::uint64_t m, std::uint64_t t, BlockKind k) {
  return render(wb.word_of({m, t, k}, 1'000'000));
}

// pi^(m)(1, x): the prefix of A^(m) before its (x+1)-th symbol m.
Word pi_from_sequence(const Word& a, Symbol m, std::uint64_t x) {
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == m && seen++ == x) return Word(a.begin(), a.begin() + i);
  }
  FAIL("sequence too short");
  return {};
}

}  // namespace

TEST_CASE("block words") {
  Engine e;
  WordBuilder wb(e.lengths());
  CHECK(word(wb, 1, 3, BlockKind::B) == "112112223");
  CHECK(word(wb, 1, 4, BlockKind::S) == "223222332");
  CHECK(word(wb, 1, 4, BlockKind::T) == "22232");
  CHECK(word(wb, 1, 5, BlockKind::T) == "22232223222332");
  CHECK(word(wb, 2, 3, BlockKind::P) == "22322233");
  for (std::uint64_t m = 1; m <= 5; ++m) CHECK(word(wb, m, 1, BlockKind::T).empty());
}

TEST_CASE("lengths") {
  Engine e;
  LengthTables& lt = e.lengths();
  CHECK(lt.beta(2, 5) == 127);
  CHECK(lt.sigma(1, 6) == 24);
  CHECK(lt.tau(1, 5) == 14);
  CHECK(lt.beta(5, 8) == 335935);
  CHECK(lt.pi_length(2, 9) == 13);
  for (std::uint64_t m = 1; m <= 4; ++m) CHECK(lt.pi_length(m, 0) == 0);
  CHECK(lt.rho(1, 0) == 1);
  CHECK(lt.rho(1, 1) == 3);
  CHECK(lt.rho(1, 2) == 8);
  CHECK_THROWS_AS(lt.beta(1, 0), InvalidArgument);
}

TEST_CASE("length recurrences") {
  Engine e;
  LengthTables& lt = e.lengths();
  for (std::uint64_t m = 1; m <= 4; ++m) {
    CHECK(lt.beta(m, 1) == 1);
    CHECK(lt.tau(m, 1) == 0);
    Nat tau = 0;
    for (std::uint64_t t = 1; t <= 300; ++t) {
      CHECK(lt.beta(m, t + 1) == (m + 1) * lt.beta(m, t) + lt.sigma(m, t));
      CHECK(lt.tau(m, t) == tau);
      tau += lt.sigma(m, t);
    }
    for (std::uint64_t n = 0; n <= 20; ++n) {
      CHECK(lt.rho(m, n + 1) == lt.rho(m, n) + lt.beta(m + 1, n + 1) + lt.sigma(m + 1, n + 1));
      CHECK(lt.rho(m, n) == lt.length_of({m + 1, n + 1, BlockKind::P}));
    }
  }
}

TEST_CASE("word lengths match the tables") {
  Engine e;
  WordBuilder wb(e.lengths());
  for (std::uint64_t m = 1; m <= 3; ++m) {
    for (std::uint64_t t = 1; t <= 9; ++t) {
      for (BlockKind k : {BlockKind::B, BlockKind::S, BlockKind::T, BlockKind::P}) {
        CHECK(wb.word_of({m, t, k}, 10'000'000).size() == e.lengths().length_of({m, t, k}));
      }
    }
  }
}

TEST_CASE("words over the cap report their exact length") {
  Engine e;
  WordBuilder wb(e.lengths());
  try {
    wb.word_of({1, 30, BlockKind::B}, 1000);
    FAIL("no cap error");
  } catch (const CapExceeded& ex) {
    CHECK(ex.length() == e.lengths().beta(1, 30));
  }
  CHECK_THROWS_AS(wb.pi_word(1, 1 << 20, 10), CapExceeded);
}

TEST_CASE("glue classification examples") {
  Engine e;
  Glue g = glue_classify(e.iota(), 1, 2);
  CHECK(g.u == 2);
  CHECK_FALSE(g.plus_one);
  g = glue_classify(e.iota(), 1, 5);
  CHECK(g.u == 2);
  CHECK(g.plus_one);
  g = glue_classify(e.iota(), 1, 1);
  CHECK(g.u == 1);
  CHECK_FALSE(g.plus_one);
}

TEST_CASE("B words are prefixes of the sequence and T words are suffixes of B") {
  Engine e;
  WordBuilder wb(e.lengths());
  for (Symbol m = 1; m <= 3; ++m) {
    Word a = naive_sequence(m, 200'000);
    for (std::uint64_t t = 1; t <= 12; ++t) {
      Nat len = e.lengths().beta(m, t);
      if (len > a.size()) break;
      Word b = wb.word_of({m, t, BlockKind::B}, a.size());
      CHECK(std::equal(b.begin(), b.end(), a.begin()));
      Word tt = wb.word_of({m, t, BlockKind::T}, a.size());
      REQUIRE(tt.size() <= b.size());
      CHECK(std::equal(tt.rbegin(), tt.rend(), b.rbegin()));
    }
  }
}

TEST_CASE("pi words are the sequence cut before each symbol m") {
  Engine e;
  WordBuilder wb(e.lengths());
  for (Symbol m = 1; m <= 3; ++m) {
    Word a = naive_sequence(m, 50'000);
    for (std::uint64_t x = 0; x <= 300; ++x) {
      Word p = wb.pi_word(m, x, a.size());
      REQUIRE(p == pi_from_sequence(a, m, x));
      CHECK(a[p.size()] == m);
      CHECK(p.size() == e.lengths().pi_length(m, x));
      CHECK(curling_number(p).k <= m);
    }
  }
  CHECK(render(wb.pi_word(2, 7, 100)) == "222322232");
}

TEST_CASE("T words have curling number at most m") {
  Engine e;
  WordBuilder wb(e.lengths());
  for (std::uint64_t m = 1; m <= 3; ++m) {
    for (std::uint64_t t = 2; t <= 40; ++t) {
      Word w = wb.word_of({m, t, BlockKind::T}, 1'000'000);
      CHECK(curling_number(w).k <= m);
    }
  }
}

TEST_CASE("glue words built two ways agree") {
  Engine e;
  WordBuilder wb(e.lengths());
  for (std::uint64_t m = 1; m <= 3; ++m) {
    for (std::uint64_t t = 1; t <= 60; ++t) {
      CHECK(wb.word_of({m, t, BlockKind::S}, 10'000'000) ==
            wb.glue_by_difference(m, t, 10'000'000));
    }
  }
}

TEST_CASE("structural prefix equals the naive sequence") {
  Engine e;
  WordBuilder wb(e.lengths());
  for (Symbol m = 1; m <= 4; ++m) {
    CHECK(wb.sequence_prefix(m, 20'000) == naive_sequence(m, 20'000));
  }
}

TEST_CASE("concurrent length queries") {
  Engine shared;
  Engine fresh;
  std::vector<std::thread> threads;
  std::vector<std::vector<Nat>> seen(4);
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] {
      for (std::uint64_t t = 1; t <= 200; ++t)
        seen[i].push_back(shared.lengths().sigma(1 + i % 3, t));
    });
  }
  for (auto& th : threads) th.join();
  for (int i = 0; i < 4; ++i) {
    for (std::uint64_t t = 1; t <= 200; ++t) {
      CHECK(seen[i][t - 1] == fresh.lengths().sigma(1 + i % 3, t));
    }
  }
}
