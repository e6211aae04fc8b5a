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
#include "gijswijt/constants.hpp"

#include <algorithm>
#include <string>
#include <variant>

#include "gijswijt/occurrence.hpp"

namespace gijswijt {

namespace {

constexpr std::uint64_t kNu1MinCutoff = 79;

Rational inverse_power(std::uint64_t base, std::uint64_t exp) {
  return Rational(Nat(1), pow_nat(base, exp));
}

void check_level(std::uint64_t m) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
}

// Group k collects the indices i >= 1 with ceil(log_r(2i-1)) = k.
struct Group {
  Nat first;
  Nat last;
};

Group group_of(std::uint64_t r, std::uint64_t k) {
  if (k == 0) return {Nat(1), Nat(1)};
  Nat below = pow_nat(r, k - 1);
  Nat top = pow_nat(r, k);
  return {(below + 1) / 2 + 1, (top + 1) / 2};
}

// sum_{i=a}^{b} r^{-i}
Rational geometric(std::uint64_t r, const Nat& a, const Nat& b) {
  if (a > b) return Rational(0);
  auto ia = static_cast<std::uint64_t>(a);
  auto ib = static_cast<std::uint64_t>(b);
  Rational s = inverse_power(r, ia) - inverse_power(r, ib + 1);
  return s * Rational(Nat(r), Nat(r - 1));
}

}  // namespace

Rational epsilon_tail_bound(std::uint64_t m, std::uint64_t n) {
  check_level(m);
  if (n < 1) n = 1;
  const std::uint64_t r = m + 1;
  const std::uint64_t c = m + 2;
  const Rational scale(Nat(7), Nat(2));
  const Nat start = n;
  Rational total = 0;
  for (std::uint64_t k = 0;; ++k) {
    Group g = group_of(r, k);
    Nat a = std::max(g.first, start);
    if (a <= g.last) total += scale * Rational(pow_nat(c, k)) * geometric(r, a, g.last);
    if (g.last < start) continue;
    Group g1 = group_of(r, k + 1);
    Group g2 = group_of(r, k + 2);
    // Bounds of later groups shrink by c * r^-(gap) each step, and the gaps
    // between group starts only grow.
    auto gap = static_cast<std::uint64_t>(g2.first - g1.first);
    bool shrinking = Rational(Nat(c)) * inverse_power(r, gap) <= Rational(Nat(1), Nat(2));
    if (!shrinking) continue;
    Rational next = scale * Rational(pow_nat(c, k + 1)) *
                    inverse_power(r, static_cast<std::uint64_t>(g1.first)) *
                    Rational(Nat(r), Nat(r - 1));
    if (next * Rational(pow_nat(2, 64)) < total || total == 0) {
      total += 2 * next;
      return total;
    }
  }
}

RatEnclosure epsilon_at_cutoff(Engine& engine, std::uint64_t m, std::uint64_t n) {
  check_level(m);
  if (n < 1) throw InvalidArgument("cutoff must be at least 1");
  Rational lo(engine.lengths().beta(m, n), pow_nat(m + 1, n - 1));
  return {lo, lo + epsilon_tail_bound(m, n)};
}

RatEnclosure epsilon(Engine& engine, std::uint64_t m, unsigned decimals) {
  check_level(m);
  if (decimals < 1) throw InvalidArgument("decimals must be at least 1");
  Rational target(Nat(1), pow_nat(10, decimals));
  std::uint64_t n = 4;
  while (epsilon_tail_bound(m, n) >= target) n += n / 2 + 1;
  return epsilon_at_cutoff(engine, m, n);
}

RatEnclosure nu_at_cutoff(Engine& engine, std::uint64_t m, std::uint64_t n) {
  check_level(m);
  IotaEngine& io = engine.iota();
  if (m >= 2) {
    Nat s = 0;
    for (std::uint64_t v = 0; v <= n; ++v) {
      s *= m + 1;
      if (io.in_v(m, v)) s += 1;
    }
    Nat den = pow_nat(m + 1, n + 1);
    Rational lo(s * m, den);
    return {lo, lo + Rational(Nat(1), den)};
  }
  Nat q = 0;
  Nat acc = 0;
  for (std::uint64_t b = 0; b < n; ++b) {
    if (io.in_q(b)) q += 1;
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < b; ++a) count += io.in_r(a, b) ? 1 : 0;
    acc = acc * 2 + count;
  }
  Rational lo(acc, pow_nat(2, n));
  return {lo, lo + Rational(1 + q, pow_nat(2, n))};
}

RatEnclosure nu(Engine& engine, std::uint64_t m, unsigned decimals) {
  check_level(m);
  if (decimals < 1) throw InvalidArgument("decimals must be at least 1");
  Nat scale = pow_nat(10, decimals);
  if (m >= 2) {
    std::uint64_t n = 0;
    while (pow_nat(m + 1, n + 1) <= scale) ++n;
    return nu_at_cutoff(engine, m, n);
  }
  IotaEngine& io = engine.iota();
  std::uint64_t x = 0;
  Nat q = 0;
  while (true) {
    if ((1 + q) * scale < pow_nat(2, x)) break;
    if (io.in_q(x)) q += 1;
    ++x;
  }
  return nu_at_cutoff(engine, 1, std::max(x, kNu1MinCutoff));
}

RatEnclosure enclose(Engine& engine, Constant which, std::uint64_t m, unsigned decimals) {
  return which == Constant::Nu ? nu(engine, m, decimals) : epsilon(engine, m, decimals);
}

std::string truncate_decimal(const Rational& x, unsigned decimals) {
  if (x < 0) throw InvalidArgument("negative value");
  Nat scale = pow_nat(10, decimals);
  Nat f = floor_of(x * Rational(scale));
  Nat whole = f / scale;
  std::string frac = Nat(f % scale).str();
  if (decimals == 0) return whole.str();
  frac.insert(frac.begin(), decimals - frac.size(), '0');
  return whole.str() + "." + frac;
}

CertifiedDecimal certified_decimal(Engine& engine, Constant which, std::uint64_t m,
                                   unsigned decimals) {
  unsigned precision = decimals + 4;
  for (unsigned i = 0; i < engine.config().max_refinements; ++i) {
    RatEnclosure e = enclose(engine, which, m, precision);
    std::string lo = truncate_decimal(e.lo, decimals);
    if (lo == truncate_decimal(e.hi, decimals)) return {lo, e};
    precision += precision / 2 + 4;
  }
  throw Error("enclosure did not settle within the refinement limit");
}

Approximant approximant(Engine& engine, Constant target, std::uint64_t m, std::uint64_t n) {
  check_level(m);
  if (n < m + 2) throw InvalidArgument("approximants need n >= m + 2");
  Approximant ap;
  ap.target = target;
  ap.m = m;
  ap.n = n;
  const EngineConfig& cfg = engine.config();

  if (target == Constant::Epsilon) {
    TFirst tf = t_first(engine, m, n);
    if (!std::holds_alternative<Nat>(tf)) throw Infeasible("t is only known as a tower");
    const Nat& t = std::get<Nat>(tf);
    if (t > cfg.max_exact_index) throw Infeasible("t = " + t.str() + " is too large");
    auto ti = static_cast<std::uint64_t>(t);
    ap.numerator = engine.lengths().beta(m, ti) - 1;
    ap.denominator = pow_nat(m + 1, ti - 1) - 1;
    ap.gap_bound = epsilon_tail_bound(m, (m + 1) * (ti - 1));
    ap.sign = 1;
    return ap;
  }

  if (m >= 2 ? n < m + 3 : n < 5) {
    throw InvalidArgument("nu approximants need n >= m + 3 (n >= 5 when m = 1)");
  }
  TFirst upper = t_first(engine, m + 1, n);
  if (!std::holds_alternative<Nat>(upper)) throw Infeasible("t is only known as a tower");
  Nat t = std::get<Nat>(upper) - 1;
  std::uint64_t limit = m >= 2 ? cfg.max_set_bound : cfg.max_pair_bound;
  if (t > limit) throw Infeasible("exponent " + t.str() + " is above the set bound");
  auto ti = static_cast<std::uint64_t>(t);
  ap.sign = -1;
  if (m >= 2) {
    ap.numerator = engine.iota().iota_inv_power(m, ti) - 2;
    ap.denominator = pow_nat(m + 1, ti) - 1;
    Nat bound = boost::multiprecision::pow(ap.denominator, static_cast<unsigned>(m + 1));
    ap.gap_bound = Rational(Nat(1), bound);
    return ap;
  }
  IotaEngine& io = engine.iota();
  Nat q = 0;
  Nat scaled_r = 0;
  for (std::uint64_t b = 0; b < ti; ++b) {
    if (io.in_q(b)) q += 1;
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < b; ++a) count += io.in_r(a, b) ? 1 : 0;
    scaled_r = scaled_r * 2 + count;
  }
  Nat two_t = pow_nat(2, ti);
  ap.numerator = q + scaled_r;
  ap.denominator = two_t - 1;
  Rational r_t(scaled_r, two_t);
  Rational a(Nat(1), two_t * (two_t - 1));
  ap.gap_bound = (a + Rational(Nat(1), two_t * two_t)) * Rational(q) + a * r_t;
  return ap;
}

}  // namespace gijswijt
