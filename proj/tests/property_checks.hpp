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

// Invariant checks shared by the property suite and the acceptance runner.
// Each returns an empty string on success, otherwise the first violation.

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "gijswijt/blocks.hpp"
#include "gijswijt/constants.hpp"
#include "gijswijt/digits.hpp"
#include "gijswijt/engine.hpp"
#include "gijswijt/occurrence.hpp"
#include "gijswijt/words.hpp"

namespace gijswijt::checks {

inline std::string at(const std::string& what, std::uint64_t a, std::uint64_t b) {
  return what + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Base-b digits of n read in base b+1, computed without the library.
inline std::uint64_t reread(std::uint64_t b, std::uint64_t n) {
  std::uint64_t out = 0, scale = 1;
  for (; n; n /= b, scale *= b + 1) out += (n % b) * scale;
  return out;
}

// a is in the image of iota_m exactly when pi^(m+1)(1, chi(a)) has curling
// number at most m. That pi prefix is the level-(m+1) sequence cut just
// before its (chi(a)+1)-th symbol m+1, so the naive sequence suffices.
inline std::string membership_oracle(Engine& e, std::uint64_t m, std::uint64_t a_max) {
  std::uint64_t x_max = reread(m + 1, a_max) + 1;
  auto s = static_cast<Symbol>(m + 1);
  std::vector<std::uint64_t> cut;
  Word seq;
  for (std::uint64_t n = 4 * x_max; cut.size() <= x_max; n *= 2) {
    seq = naive_sequence(s, n);
    cut.clear();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == s) cut.push_back(i);
    }
  }
  std::span<const Symbol> all(seq);
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    std::uint64_t len = cut[reread(m + 1, a)];
    bool oracle = curling_number(all.first(len)).k <= m;
    if (oracle != e.iota().in_image(m, a)) return at("membership differs at (m, a) =", m, a);
  }
  return {};
}

// Glue strings against their classification, and the flattened
// classification against the ruler sequence r_{m+1} + 1.
inline std::string glue_structure(Engine& e, std::uint64_t m, std::uint64_t t_max) {
  WordBuilder wb(e.lengths());
  std::vector<std::uint64_t> flat;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    Glue g = glue_classify(e.iota(), m, t);
    if (g.plus_one && g.u < 2) return at("plus one with u = 1 at (m, t) =", m, t);
    Word want = wb.word_of({m + 1, g.u, BlockKind::P}, 50'000'000);
    if (g.plus_one) want.push_back(static_cast<Symbol>(m + 1));
    if (wb.glue_by_difference(m, t, 50'000'000) != want) return at("glue word at (m, t) =", m, t);
    flat.push_back(g.u);
    if (g.plus_one) flat.push_back(1);
  }
  auto ruler = ruler_prefix(m + 1, flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] != ruler[i] + 1)
      return at("flattened glue differs from the ruler at (m, i) =", m, i);
  }
  return {};
}

// ceil(x * base^e) when the enclosure decides it, else -1.
inline Nat decided_ceil(const RatEnclosure& x, std::uint64_t base, std::uint64_t e) {
  Rational scale(pow_nat(base, e));
  Nat lo = ceil_of(x.lo * scale);
  Nat hi = ceil_of(x.hi * scale);
  return lo == hi ? lo : Nat(-1);
}

// iota_m^{-1}((m+1)^t) - 1 = ceil(nu_m (m+1)^t) = t^(m)(n) - 1 for
// t = t^(m+1)(n) - 1, at every stage whose exponent is at most t_limit.
inline std::string rounding_identities(Engine& e, std::uint64_t m_max, std::uint64_t t_limit,
                                       std::uint64_t* stages = nullptr) {
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    for (std::uint64_t n = m + 2;; ++n) {
      TFirst upper = t_first(e, m + 1, n);
      if (!std::holds_alternative<Nat>(upper)) break;
      Nat t = std::get<Nat>(upper) - 1;
      if (t > t_limit) break;
      auto ti = static_cast<std::uint64_t>(t);
      auto digits = static_cast<unsigned>(static_cast<double>(ti) * std::log10(m + 1.0)) + 10;
      Nat c = decided_ceil(nu(e, m, digits), m + 1, ti);
      if (c < 0) return at("nu enclosure too wide at (m, n) =", m, n);
      Nat inv = e.iota().iota_inv_power(m, ti);
      if (inv - 1 != c) return at("inverse rounding fails at (m, n) =", m, n);
      TFirst lower = t_first(e, m, n);
      if (!std::holds_alternative<Nat>(lower) || std::get<Nat>(lower) - 1 != c) {
        return at("t rounding fails at (m, n) =", m, n);
      }
      ++count;
    }
  }
  if (stages) *stages = count;
  return {};
}

// The regularity of Q and R at t = t^(2)(n) - 1.
inline std::string qr_shifts(Engine& e, std::uint64_t n) {
  IotaEngine& io = e.iota();
  auto t = static_cast<std::uint64_t>(std::get<Nat>(t_first(e, 2, n))) - 1;
  for (std::uint64_t a = 0; a < t; ++a) {
    if (io.in_q(a) != io.in_q(a + t)) return at("Q shift fails at (n, a) =", n, a);
  }
  for (std::uint64_t b = 1; b < t; ++b) {
    for (std::uint64_t a = 0; a < b; ++a) {
      if (io.in_r(a, b) != io.in_r(a + t, b + t)) return at("R shift fails at (a, b) =", a, b);
    }
  }
  for (std::uint64_t a = 0; a < t; ++a) {
    if (!io.in_q(a)) continue;
    for (std::uint64_t b = t; b < 2 * t; ++b) {
      if (!io.in_r(a, b)) return at("missing R pair (a, b) =", a, b);
    }
  }
  if (io.in_r(t, 2 * t)) return at("unexpected R pair (t, 2t) at (n, t) =", n, t);
  return {};
}

// The regularity of V_m at s = iota_{m+1}^{-1}((m+2)^y) - 1.
inline std::string v_shifts(Engine& e, std::uint64_t m, std::uint64_t y) {
  IotaEngine& io = e.iota();
  auto s = static_cast<std::uint64_t>(io.iota_inv_power(m + 1, y)) - 1;
  for (std::uint64_t mu = 1; mu < m * s; ++mu) {
    if (io.in_v(m, mu + s) != io.in_v(m, mu)) return at("V shift fails at (m, mu) =", m, mu);
  }
  if (io.in_v(m, (m + 1) * s)) return at("unexpected V member at (m, y) =", m, y);
  return {};
}

// 0 < eps_m - p/q < gap, with eps_m enclosed finely enough to decide both.
inline std::string epsilon_approximant(Engine& e, std::uint64_t m, std::uint64_t n) {
  Approximant ap = approximant(e, Constant::Epsilon, m, n);
  Rational f(ap.numerator, ap.denominator);
  auto digits = static_cast<unsigned>(digit_count(10, ceil_of(1 / ap.gap_bound))) + 10;
  RatEnclosure eps = epsilon(e, m, digits);
  if (ap.sign != 1 || !(eps.lo > f))
    return at("approximant is not below epsilon at (m, n) =", m, n);
  if (!(eps.hi - f < ap.gap_bound)) return at("gap bound fails at (m, n) =", m, n);
  return {};
}

// |eps_m - p/q| < q^-(m + 1 - 1/10), checked exactly as
// |eps_m - p/q|^10 * q^(10 m + 9) < 1.
inline std::string epsilon_gap_decay(Engine& e, std::uint64_t m, std::uint64_t n) {
  Approximant ap = approximant(e, Constant::Epsilon, m, n);
  auto digits = static_cast<unsigned>(digit_count(10, ceil_of(1 / ap.gap_bound))) + 10;
  Rational diff = epsilon(e, m, digits).hi - Rational(ap.numerator, ap.denominator);
  using boost::multiprecision::pow;
  Nat num = numerator(diff);
  Nat den = denominator(diff);
  auto e10 = static_cast<unsigned>(10 * m + 9);
  if (!(pow(num, 10) * pow(ap.denominator, e10) < pow(den, 10))) return at("approximation exponent below m + 0.9 at (m, n) =", m, n);
  return {};
}

inline std::string nu_approximant(Engine& e, std::uint64_t m, std::uint64_t n) {
  Approximant ap = approximant(e, Constant::Nu, m, n);
  Rational f(ap.numerator, ap.denominator);
  auto digits = static_cast<unsigned>(digit_count(10, ceil_of(1 / ap.gap_bound))) + 10;
  RatEnclosure v = nu(e, m, digits);
  if (ap.sign != -1 || !(v.hi < f)) return at("approximant is not above nu at (m, n) =", m, n);
  if (!(f - v.lo < ap.gap_bound)) return at("gap bound fails at (m, n) =", m, n);
  return {};
}

// S_{t(n)-1+i} = S_i for 1 <= i < m (t(n) - 1).
inline std::string glue_periodicity(Engine& e, std::uint64_t m, std::uint64_t n) {
  auto t = static_cast<std::uint64_t>(std::get<Nat>(t_first(e, m, n)));
  WordBuilder wb(e.lengths());
  for (std::uint64_t i = 1; i + 1 <= m * (t - 1); ++i) {
    Glue a = glue_classify(e.iota(), m, t - 1 + i);
    Glue b = glue_classify(e.iota(), m, i);
    if (a.u != b.u || a.plus_one != b.plus_one) return at("glue period fails at (n, i) =", n, i);
    if (e.lengths().sigma(m, i) < 100'000 && wb.word_of({m, t - 1 + i, BlockKind::S}, 100'000) !=
                                                 wb.word_of({m, i, BlockKind::S}, 100'000)) {
      return at("glue words differ at (n, i) =", n, i);
    }
  }
  return {};
}

// T^(m) at t^(m)(n) equals B^(m+1) at t^(m+1)(n), and iota_m(t^(m)(n)) is
// (m+1)^(t^(m+1)(n) - 1).
inline std::string tail_block_identity(Engine& e, std::uint64_t m, std::uint64_t n) {
  auto t = static_cast<std::uint64_t>(std::get<Nat>(t_first(e, m, n)));
  auto u = static_cast<std::uint64_t>(std::get<Nat>(t_first(e, m + 1, n)));
  if (e.iota().iota(m, t) != pow_nat(m + 1, u - 1)) return at("iota at t(n) fails for", m, n);
  WordBuilder wb(e.lengths());
  if (wb.word_of({m, t, BlockKind::T}, 10'000'000) !=
      wb.word_of({m + 1, u, BlockKind::B}, 10'000'000)) {
    return at("T and B differ for", m, n);
  }
  return {};
}

// Every cube suffix X^3 of pi^(m)(1, x) has X conjugate to a power of some
// B_t^(l) with l >= m.
inline std::string cube_suffixes(Engine& e, std::uint64_t m, std::uint64_t x_max) {
  WordBuilder wb(e.lengths());
  Word a = naive_sequence(static_cast<Symbol>(m), 20'000);
  std::vector<std::size_t> cut;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == m) cut.push_back(i);
  }
  if (cut.size() <= x_max) return "sequence too short for the cube check";
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    std::size_t len = cut[x];
    for (std::size_t p = 1; 3 * p <= len; ++p) {
      bool cube = true;
      for (std::size_t i = 0; i < 2 * p && cube; ++i) cube = a[len - 1 - i] == a[len - 1 - i - p];
      if (!cube) continue;
      Word period(a.begin() + static_cast<std::ptrdiff_t>(len - p),
                  a.begin() + static_cast<std::ptrdiff_t>(len));
      Symbol low = *std::min_element(period.begin(), period.end());
      bool found = false;
      for (std::uint64_t t = 1; !found; ++t) {
        Nat b = e.lengths().beta(low, t);
        if (b > p) break;
        if (p % static_cast<std::uint64_t>(b)) continue;
        Word blk = wb.word_of({low, t, BlockKind::B}, p);
        Word twice;
        for (std::size_t k = 0; k < 2 * p / blk.size(); ++k)
          twice.insert(twice.end(), blk.begin(), blk.end());
        found =
            std::search(twice.begin(), twice.end(), period.begin(), period.end()) != twice.end();
      }
      if (!found || low < m) return at("cube period is not a block power at (x, p) =", x, p);
    }
  }
  return {};
}

}  // namespace gijswijt::checks
