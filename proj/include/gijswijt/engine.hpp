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

#include "gijswijt/blocks.hpp"
#include "gijswijt/iota.hpp"

namespace gijswijt {

struct EngineConfig {
  // Largest exponent or set index that is enumerated before a result
  // degrades to a symbolic form.
  std::uint64_t max_set_bound = 1'000'000;
  // R is enumerated pairwise, so its bound is kept much smaller.
  std::uint64_t max_pair_bound = 4096;
  // Decimal digits allowed for an exact first-occurrence position.
  std::uint64_t digit_budget = 1'000'000;
  // Largest block index for which beta is built by its recurrence.
  std::uint64_t max_exact_index = 200'000;
  unsigned max_refinements = 40;
};

class Engine {
 public:
  explicit Engine(EngineConfig config = {})
      : config_(config), iota_(config.max_set_bound, config.max_pair_bound), lengths_(iota_) {}

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  IotaEngine& iota() { return iota_; }
  LengthTables& lengths() { return lengths_; }
  const EngineConfig& config() const { return config_; }

 private:
  EngineConfig config_;
  IotaEngine iota_;
  LengthTables lengths_;
};

}  // namespace gijswijt
