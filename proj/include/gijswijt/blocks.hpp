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
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "gijswijt/iota.hpp"
#include "gijswijt/nat.hpp"
#include "gijswijt/words.hpp"

namespace gijswijt {

enum class BlockKind { B, S, T, P };

struct BlockId {
  std::uint64_t m = 1;
  std::uint64_t t = 1;
  BlockKind kind = BlockKind::B;
};

struct Glue {
  std::uint64_t u = 1;
  bool plus_one = false;
};

Glue glue_classify(IotaEngine& iota, std::uint64_t m, std::uint64_t t);

// Per-level memo of beta, sigma and tau. tau(m, t) reads the base-(m+1)
// digits of iota_m(t) against beta at level m+1, so each request may grow
// the tables of higher levels.
class LengthTables {
 public:
  explicit LengthTables(IotaEngine& iota) : iota_(iota) {}

  Nat beta(std::uint64_t m, std::uint64_t t);
  Nat sigma(std::uint64_t m, std::uint64_t t);
  Nat tau(std::uint64_t m, std::uint64_t t);
  // Length of P_{n+1} at level m+1.
  Nat rho(std::uint64_t m, std::uint64_t n);
  Nat pi_length(std::uint64_t m, const Nat& a);
  Nat length_of(const BlockId& id);

  IotaEngine& iota() { return iota_; }

 private:
  struct Level {
    std::vector<Nat> beta{Nat(1)};
    std::vector<Nat> tau;
  };

  const Nat& tau_ref(std::uint64_t m, std::uint64_t t);

  IotaEngine& iota_;
  std::recursive_mutex mu_;
  std::map<std::uint64_t, Level> levels_;
};

// Materializes block words under an explicit length cap. Not thread-safe;
// use one builder per thread.
class WordBuilder {
 public:
  explicit WordBuilder(LengthTables& lengths) : lengths_(lengths) {}

  Word word_of(const BlockId& id, std::uint64_t cap);
  Word pi_word(std::uint64_t m, const Nat& a, std::uint64_t cap);
  // S_t as the part of T_{t+1} after its prefix T_t.
  Word glue_by_difference(std::uint64_t m, std::uint64_t t, std::uint64_t cap);
  // First n_terms of the level-m sequence, read off a long enough B block.
  Word sequence_prefix(std::uint64_t m, std::uint64_t n_terms);

 private:
  const Word& b_word(std::uint64_t m, std::uint64_t t);
  Word s_word(std::uint64_t m, std::uint64_t t);
  Word t_word(std::uint64_t m, std::uint64_t t);
  Word p_word(std::uint64_t m, std::uint64_t t);
  void check_cap(const BlockId& id, std::uint64_t cap);

  LengthTables& lengths_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Word> b_cache_;
};

}  // namespace gijswijt
