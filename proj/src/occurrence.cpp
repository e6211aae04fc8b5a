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
#include "gijswijt/occurrence.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "gijswijt/digits.hpp"

namespace gijswijt {

namespace {

void check_pair(std::uint64_t m, std::uint64_t n) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
  if (n < m) throw InvalidArgument("symbol must be at least the level");
}

std::string ceil_chain(std::uint64_t k, std::uint64_t n) {
  std::string nu = "nu" + std::to_string(k);
  if (k + 2 == n) return "ceil(" + nu + " * " + std::to_string(k + 1) + ")";
  return "ceil(" + nu + " * " + std::to_string(k + 1) + "^" + ceil_chain(k + 1, n) + ")";
}

void check_tower_domain(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || m + 2 > n) {
    throw InvalidArgument(
        "tower form needs 1 <= m <= n - 2; phi(m, m) = 1 and phi(m, m+1) = m + 2");
  }
  if (m == 1 && n == 3) throw InvalidArgument("tower form excludes (1, 3); phi(1, 3) = 9");
}

}  // namespace

TFirst t_first(Engine& engine, std::uint64_t m, std::uint64_t n) {
  check_pair(m, n);
  if (n == m) return Nat(1);
  if (n == m + 1) return Nat(2);
  const EngineConfig& cfg = engine.config();
  Nat t = 2;
  for (std::uint64_t k = n - 2;; --k) {
    Nat e = t - 1;
    std::uint64_t limit = k >= 2 ? cfg.max_set_bound : cfg.max_pair_bound;
    if (e > limit) return Tower{m, n};
    t = engine.iota().iota_inv_power(k, static_cast<std::uint64_t>(e));
    if (k == m) return t;
  }
}

Nat epsilon_floor(Engine& engine, std::uint64_t m, std::uint64_t exponent) {
  Nat power = pow_nat(m + 1, exponent);
  std::uint64_t digits = digit_count(10, power);
  if (digits > engine.config().digit_budget) throw Infeasible("value exceeds the digit budget");
  unsigned decimals = static_cast<unsigned>(digits) + 8;
  for (unsigned i = 0; i < engine.config().max_refinements; ++i) {
    RatEnclosure e = epsilon(engine, m, decimals);
    Rational scale(power - 1);
    Nat lo = floor_of(1 + e.lo * scale);
    Nat hi = floor_of(1 + e.hi * scale);
    if (lo == hi) return lo;
    decimals *= 2;
  }
  throw Error("floor formula did not settle within the refinement limit");
}

PhiResult phi(Engine& engine, std::uint64_t m, std::uint64_t n) {
  check_pair(m, n);
  if (n == m) return PhiExact{Nat(1)};
  if (n == m + 1) return PhiExact{Nat(m + 2)};
  if (m == 1 && n == 3) return PhiExact{Nat(9)};
  TFirst tf = t_first(engine, m, n);
  if (std::holds_alternative<Tower>(tf)) return std::get<Tower>(tf);
  const Nat& t = std::get<Nat>(tf);
  const EngineConfig& cfg = engine.config();
  double digits = static_cast<double>(t - 1) * std::log10(static_cast<double>(m + 1)) + 1;
  if (t <= cfg.max_exact_index && digits <= static_cast<double>(cfg.digit_budget)) {
    return PhiExact{engine.lengths().beta(m, static_cast<std::uint64_t>(t))};
  }
  return PhiFloorFormula{m, t - 1, epsilon(engine, m, 20)};
}

std::string render_tower(std::uint64_t m, std::uint64_t n) {
  check_tower_domain(m, n);
  std::string e = "e" + std::to_string(m);
  return "floor(1 - " + e + " + " + e + " * " + std::to_string(m + 1) + "^" + ceil_chain(m, n) +
         ")";
}

std::string render_t_tower(std::uint64_t m, std::uint64_t n) {
  check_tower_domain(m, n);
  return "1 + " + ceil_chain(m, n);
}

std::string render(const PhiResult& r) {
  if (auto* x = std::get_if<PhiExact>(&r)) return x->value.str();
  if (auto* f = std::get_if<PhiFloorFormula>(&r)) {
    std::string e = "e" + std::to_string(f->m);
    return "floor(1 - " + e + " + " + e + " * " + std::to_string(f->m + 1) + "^" +
           f->exponent.str() + ")";
  }
  const Tower& t = std::get<Tower>(r);
  return render_tower(t.m, t.n);
}

std::string render(const TFirst& t) {
  if (auto* x = std::get_if<Nat>(&t)) return x->str();
  const Tower& tw = std::get<Tower>(t);
  return render_t_tower(tw.m, tw.n);
}

PairPosition first_pair_position(Engine& engine, std::uint64_t n) {
  if (n < 2) throw InvalidArgument("pattern symbol must be at least 2");
  LengthTables& lt = engine.lengths();
  const std::uint64_t cap = engine.config().max_exact_index;
  // End of the first n n in the level-n sequence, which starts n n.
  Nat end = 2;
  for (std::uint64_t k = n - 1; k >= 1; --k) {
    // T_t of level k is a prefix of the level-(k+1) sequence; the first one
    // that reaches the pattern is the tail of B_t at level k.
    std::uint64_t t = 1;
    while (lt.tau(k, t) < end) {
      if (++t > cap) throw Infeasible("descent needs a block index above " + std::to_string(cap));
    }
    end = lt.beta(k, t) - lt.tau(k, t) + end;
  }
  return {end - 1, end};
}

namespace {

class SymbolCounter {
 public:
  SymbolCounter(Engine& engine, std::uint64_t s) : engine_(engine), s_(s) {}

  Nat block(std::uint64_t m, std::uint64_t t) {
    if (m > s_) return 0;
    auto& v = blocks_[m];
    if (v.empty()) v.push_back(m == s_ ? 1 : 0);
    while (v.size() < t) {
      std::uint64_t i = v.size();
      Nat next = v.back() * (m + 1) + glue(m, i);
      v.push_back(next);
    }
    return v[t - 1];
  }

  Nat tail(std::uint64_t m, std::uint64_t t) {
    if (m + 1 > s_) return 0;
    auto d = to_digits(m + 1, engine_.iota().iota(m, t)).digits;
    Nat sum = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j]) sum += block(m + 1, j + 1) * d[j];
    }
    return sum;
  }

  Nat glue(std::uint64_t m, std::uint64_t t) { return tail(m, t + 1) - tail(m, t); }

 private:
  Engine& engine_;
  std::uint64_t s_;
  std::map<std::uint64_t, std::vector<Nat>> blocks_;
};

}  // namespace

Nat count_in_block(Engine& engine, std::uint64_t m, std::uint64_t t, std::uint64_t s) {
  return SymbolCounter(engine, s).block(m, t);
}

Nat count_in_tail(Engine& engine, std::uint64_t m, std::uint64_t t, std::uint64_t s) {
  return SymbolCounter(engine, s).tail(m, t);
}

Nat count_in_glue(Engine& engine, std::uint64_t m, std::uint64_t t, std::uint64_t s) {
  return SymbolCounter(engine, s).glue(m, t);
}

DensityEstimate density(Engine& engine, std::uint64_t m, std::uint64_t n, std::uint64_t depth) {
  check_pair(m, n);
  if (depth < 1) throw InvalidArgument("depth must be at least 1");
  RatEnclosure eps = epsilon(engine, m, 30);
  DensityEstimate d;
  d.m = m;
  d.n = n;
  if (n == m) {
    d.enclosure = {1 / eps.hi, 1 / eps.lo};
    d.certified = true;
    return d;
  }
  SymbolCounter counter(engine, n);
  Rational partial = 0;
  for (std::uint64_t t = 1; t <= depth; ++t) {
    partial += Rational(counter.glue(m, t), pow_nat(m + 1, t));
  }
  d.enclosure = {partial / eps.hi, partial / eps.lo};
  return d;
}

DensityEstimate mean_value(Engine& engine, std::uint64_t m, std::uint64_t depth) {
  DensityEstimate out;
  out.m = m;
  out.n = m;
  out.enclosure = {0, 0};
  for (std::uint64_t n = m;; ++n) {
    DensityEstimate d = density(engine, m, n, depth);
    if (n > m && d.enclosure.hi == 0) break;
    out.enclosure.lo += d.enclosure.lo * n;
    out.enclosure.hi += d.enclosure.hi * n;
  }
  return out;
}

}  // namespace gijswijt
