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
#include <string>
#include <variant>

#include "gijswijt/constants.hpp"
#include "gijswijt/engine.hpp"
#include "gijswijt/nat.hpp"

namespace gijswijt {

// t or phi of (m, n) known only through the nested ceiling expression.
struct Tower {
  std::uint64_t m = 1;
  std::uint64_t n = 3;
};

using TFirst = std::variant<Nat, Tower>;

struct PhiExact {
  Nat value;
};

struct PhiFloorFormula {
  std::uint64_t m = 1;
  // floor(1 - e_m + e_m * (m+1)^exponent)
  Nat exponent;
  RatEnclosure epsilon;
};

using PhiResult = std::variant<PhiExact, PhiFloorFormula, Tower>;

TFirst t_first(Engine& engine, std::uint64_t m, std::uint64_t n);
PhiResult phi(Engine& engine, std::uint64_t m, std::uint64_t n);

// floor(1 - e_m + e_m * (m+1)^exponent), refining e_m until the floor is
// decided.
Nat epsilon_floor(Engine& engine, std::uint64_t m, std::uint64_t exponent);

std::string render_tower(std::uint64_t m, std::uint64_t n);
std::string render_t_tower(std::uint64_t m, std::uint64_t n);
std::string render(const PhiResult& r);
std::string render(const TFirst& t);

struct PairPosition {
  Nat start;
  Nat end;
};

// First occurrence of the pattern n n in the level-1 sequence.
PairPosition first_pair_position(Engine& engine, std::uint64_t n);

// Occurrences of symbol s in B_t, T_t and S_t of level m.
Nat count_in_block(Engine& engine, std::uint64_t m, std::uint64_t t, std::uint64_t s);
Nat count_in_tail(Engine& engine, std::uint64_t m, std::uint64_t t, std::uint64_t s);
Nat count_in_glue(Engine& engine, std::uint64_t m, std::uint64_t t, std::uint64_t s);

struct DensityEstimate {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  RatEnclosure enclosure;
  bool certified = false;
};

DensityEstimate density(Engine& engine, std::uint64_t m, std::uint64_t n, std::uint64_t depth);
DensityEstimate mean_value(Engine& engine, std::uint64_t m, std::uint64_t depth);

}  // namespace gijswijt
