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

#include "gijswijt/engine.hpp"
#include "gijswijt/nat.hpp"

namespace gijswijt {

struct RatEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

enum class Constant { Nu, Epsilon };

// nu_m with the V_m sum cut after index n (m >= 2), or nu_1 from the
// partial sums r_x, q_x with x = n.
RatEnclosure nu_at_cutoff(Engine& engine, std::uint64_t m, std::uint64_t n);
RatEnclosure nu(Engine& engine, std::uint64_t m, unsigned decimals);

// 1 + sum_{i<n} sigma(i)/(m+1)^i plus the certified tail from n on.
RatEnclosure epsilon_at_cutoff(Engine& engine, std::uint64_t m, std::uint64_t n);
RatEnclosure epsilon(Engine& engine, std::uint64_t m, unsigned decimals);

// Upper bound for sum_{i>=n} sigma_m(i)/(m+1)^i from
// sigma_m(i) < 3.5 * (m+2)^ceil(log_{m+1}(2i-1)).
Rational epsilon_tail_bound(std::uint64_t m, std::uint64_t n);

RatEnclosure enclose(Engine& engine, Constant which, std::uint64_t m, unsigned decimals);

std::string truncate_decimal(const Rational& x, unsigned decimals);

struct CertifiedDecimal {
  std::string digits;
  RatEnclosure enclosure;
};

// Refines until both ends of the enclosure truncate to the same digits.
CertifiedDecimal certified_decimal(Engine& engine, Constant which, std::uint64_t m,
                                   unsigned decimals);

struct Approximant {
  Nat numerator;
  Nat denominator;
  Constant target = Constant::Epsilon;
  std::uint64_t m = 1;
  std::uint64_t n = 3;
  Rational gap_bound;
  // Sign of target - numerator/denominator.
  int sign = 1;
};

Approximant approximant(Engine& engine, Constant target, std::uint64_t m, std::uint64_t n);

}  // namespace gijswijt
