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
#include <utility>
#include <vector>

#include "gijswijt/nat.hpp"

namespace gijswijt {

struct Expansion {
  std::uint64_t start_level = 2;
  std::vector<Nat> terms;

  std::uint64_t end_level() const { return start_level + terms.size() - 1; }
};

using PairList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// Memoized iota functions of every level, with the image membership sets
// V_m (m >= 2) and Q, R (m = 1). All members are safe to call from several
// threads.
class IotaEngine {
 public:
  static constexpr std::uint64_t kFormulaThreshold = 4096;

  explicit IotaEngine(std::uint64_t max_set_bound = 1'000'000, std::uint64_t max_pair_bound = 4096);

  Expansion level_expansion(std::uint64_t m, const Nat& a);
  bool in_image(std::uint64_t m, const Nat& a);

  Nat iota(std::uint64_t m, std::uint64_t t);

  // Direct count below kFormulaThreshold, set formula above it.
  Nat iota_inv(std::uint64_t m, const Nat& p);
  Nat iota_inv_enumerated(std::uint64_t m, const Nat& p);
  Nat iota_inv_formula(std::uint64_t m, const Nat& p);
  // iota_inv(m, (m+1)^e) without forming the power's quotients.
  Nat iota_inv_power(std::uint64_t m, std::uint64_t e);

  bool in_v(std::uint64_t m, std::uint64_t v);
  bool in_q(std::uint64_t a);
  bool in_r(std::uint64_t a, std::uint64_t b);

  std::vector<std::uint64_t> v_set(std::uint64_t m, std::uint64_t bound);
  std::vector<std::uint64_t> q_set(std::uint64_t bound);
  // Sorted by b, then a.
  PairList r_set(std::uint64_t b_bound);

  std::uint64_t max_set_bound() const { return max_set_bound_; }
  std::uint64_t max_pair_bound() const { return max_pair_bound_; }

 private:
  struct Level {
    std::vector<Nat> image;
    Nat next = 0;
  };

  bool image_from(std::uint64_t m, std::uint64_t level, Nat a);
  void enumerate_through(std::uint64_t m, const Nat& p);
  Level& level(std::uint64_t m);

  std::uint64_t max_set_bound_;
  std::uint64_t max_pair_bound_;
  std::recursive_mutex mu_;
  std::map<std::uint64_t, Level> levels_;
  // 0 unknown, 1 member, 2 not a member.
  std::map<std::uint64_t, std::vector<std::uint8_t>> v_;
  std::vector<std::uint8_t> q_;
  std::map<std::uint64_t, std::vector<std::uint8_t>> r_;
};

}  // namespace gijswijt
