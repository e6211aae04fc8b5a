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
#include <vector>

#include "gijswijt/nat.hpp"

namespace gijswijt {

struct DigitVector {
  std::uint64_t base = 2;
  // Little endian, no trailing zero digits; empty for the value 0.
  std::vector<std::uint64_t> digits;

  Nat value() const;
};

DigitVector to_digits(std::uint64_t base, const Nat& n);
Nat from_digits(std::uint64_t base, const std::vector<std::uint64_t>& digits);

std::uint64_t ord(std::uint64_t m, const Nat& n);
std::uint64_t ord(std::uint64_t m, std::uint64_t n);
std::uint64_t maxdigit(std::uint64_t m, const Nat& n);

// Base-m digits of n read in base m+1.
Nat chi(std::uint64_t m, const Nat& n);

std::vector<std::uint64_t> ruler_prefix(std::uint64_t m, std::uint64_t n_terms);

// Pairs a < b whose base-m digits agree except at one position y, where
// 2*a_y >= b_y.
bool in_pair_set(std::uint64_t m, const Nat& a, const Nat& b);

}  // namespace gijswijt
