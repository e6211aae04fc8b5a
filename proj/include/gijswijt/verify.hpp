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

#include <string>
#include <vector>

#include "gijswijt/engine.hpp"

namespace gijswijt {

struct TableCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Expands the compact notation "(X)^k" with a single digit k, nested
// freely, e.g. "(33334)^44" -> "33334333343333433334" + "4".
std::string expand_powers(const std::string& compact);

std::vector<TableCheck> verify_golden_tables(Engine& engine);

}  // namespace gijswijt
