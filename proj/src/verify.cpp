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
#include "gijswijt/verify.hpp"

#include <functional>
#include <sstream>
#include <variant>

#include "gijswijt/constants.hpp"
#include "gijswijt/occurrence.hpp"
#include "gijswijt/words.hpp"
#include "golden.hpp"

namespace gijswijt {

namespace {

std::string expand_from(const std::string& s, std::size_t& pos) {
  std::string out;
  while (pos < s.size() && s[pos] != ')') {
    if (s[pos] == '(') {
      ++pos;
      std::string inner = expand_from(s, pos);
      if (pos >= s.size() || s[pos] != ')') throw InvalidArgument("unbalanced parenthesis");
      ++pos;
      if (pos + 1 >= s.size() || s[pos] != '^') throw InvalidArgument("missing exponent");
      int k = s[pos + 1] - '0';
      pos += 2;
      for (int i = 0; i < k; ++i) out += inner;
    } else {
      out.push_back(s[pos++]);
    }
  }
  return out;
}

using Check = std::function<std::string(Engine&)>;

// Each check returns an empty string on success, or the first mismatch.
std::string check_words(Engine& engine, BlockKind kind,
                        const std::vector<std::vector<const char*>>& table) {
  WordBuilder wb(engine.lengths());
  for (std::size_t row = 0; row < table.size(); ++row) {
    for (std::size_t col = 0; col < table[row].size(); ++col) {
      BlockId id{row + 1, col + 1, kind};
      std::string got = render(wb.word_of(id, 1'000'000));
      std::string want = expand_powers(table[row][col]);
      if (got != want) {
        return "m=" + std::to_string(row + 1) + " t=" + std::to_string(col + 1) + ": got " + got;
      }
    }
  }
  return {};
}

std::string check_lengths(Engine& engine, const std::vector<std::vector<std::uint64_t>>& table,
                          Nat (LengthTables::*fn)(std::uint64_t, std::uint64_t)) {
  for (std::size_t row = 0; row < table.size(); ++row) {
    for (std::size_t col = 0; col < table[row].size(); ++col) {
      Nat got = (engine.lengths().*fn)(row + 1, col + 1);
      if (got != table[row][col]) {
        return "m=" + std::to_string(row + 1) + " t=" + std::to_string(col + 1) + ": got " +
               got.str();
      }
    }
  }
  return {};
}

std::string check_prefixes(Engine&) {
  const char* want[] = {golden::kPrefix1, golden::kPrefix2, golden::kPrefix3};
  for (Symbol m = 1; m <= 3; ++m) {
    std::string w = want[m - 1];
    std::string got = render(naive_sequence(m, w.size()));
    if (got != w) return "m=" + std::to_string(m) + ": got " + got;
  }
  return {};
}

std::string check_iota(Engine& engine) {
  IotaEngine& io = engine.iota();
  for (std::size_t t = 1; t <= golden::kIota1.size(); ++t) {
    if (io.iota(1, t) != golden::kIota1[t - 1]) return "iota_1(" + std::to_string(t) + ")";
  }
  if (io.iota_inv(1, 31) != 24) return "inverse at 31";
  if (io.iota_inv(1, 4096) != 2834) return "inverse at 4096";
  Nat big = io.iota_inv(1, pow_nat(2, 79));
  if (big.str() != golden::kIota1InvPow79) return "inverse at 2^79: got " + big.str();
  return {};
}

std::string check_sets(Engine& engine) {
  IotaEngine& io = engine.iota();
  for (std::size_t i = 0; i < golden::kV.size(); ++i) {
    std::uint64_t m = i + 2;
    const auto& want = golden::kV[i];
    auto got = io.v_set(m, want.back());
    if (got != want) return "V_" + std::to_string(m);
  }
  if (io.in_v(2, 64)) return "64 in V_2";
  if (io.q_set(golden::kQ.back()) != golden::kQ) return "Q";
  auto r = io.r_set(6);
  r.resize(golden::kR.size());
  if (r != golden::kR) return "R";
  if (io.in_r(1, 2)) return "(1,2) in R";
  return {};
}

std::string check_constants(Engine& engine, Constant which) {
  const auto& table = which == Constant::Nu ? golden::kNu : golden::kEpsilon;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto c = certified_decimal(engine, which, i + 1, 20);
    if (c.digits != table[i]) return "m=" + std::to_string(i + 1) + ": got " + c.digits;
  }
  return {};
}

std::string check_first_occurrences(Engine& engine) {
  auto exact = [&](std::uint64_t m, std::uint64_t n) -> Nat {
    PhiResult r = phi(engine, m, n);
    if (!std::holds_alternative<PhiExact>(r)) return -1;
    return std::get<PhiExact>(r).value;
  };
  const std::uint64_t phi1[] = {1, 3, 9, 220};
  for (std::uint64_t n = 1; n <= 4; ++n) {
    if (exact(1, n) != phi1[n - 1]) return "phi(1," + std::to_string(n) + ")";
  }
  TFirst t25 = t_first(engine, 2, 5);
  if (!std::holds_alternative<Nat>(t25) || std::get<Nat>(t25) != 80) return "t(2,5)";
  if (exact(2, 5).str() != golden::kPhi25) return "phi(2,5)";
  for (std::uint64_t m = 1; m <= 6; ++m) {
    Nat want = (pow_nat(m + 1, m + 2) + 2 * m - 1) / m;
    if (exact(m, m + 2) != want) return "phi(m,m+2) at m=" + std::to_string(m);
  }
  TFirst t15 = t_first(engine, 1, 5);
  if (!std::holds_alternative<Nat>(t15) || std::get<Nat>(t15).str() != golden::kIota1InvPow79) {
    return "t(1,5)";
  }
  PhiResult p15 = phi(engine, 1, 5);
  auto* f = std::get_if<PhiFloorFormula>(&p15);
  if (!f || f->exponent + 1 != std::get<Nat>(t15)) return "phi(1,5) form";
  PairPosition pos = first_pair_position(engine, 4);
  if (Nat(pos.end + 1).str() != golden::kBeta1At356) return "first 44";
  return {};
}

}  // namespace

std::string expand_powers(const std::string& compact) {
  std::size_t pos = 0;
  std::string out = expand_from(compact, pos);
  if (pos != compact.size()) throw InvalidArgument("unbalanced parenthesis");
  return out;
}

std::vector<TableCheck> verify_golden_tables(Engine& engine) {
  std::vector<std::pair<std::string, Check>> checks = {
      {"sequence prefixes", check_prefixes},
      {"B words", [](Engine& e) { return check_words(e, BlockKind::B, golden::kBWords); }},
      {"S words", [](Engine& e) { return check_words(e, BlockKind::S, golden::kSWords); }},
      {"T words", [](Engine& e) { return check_words(e, BlockKind::T, golden::kTWords); }},
      {"P words", [](Engine& e) { return check_words(e, BlockKind::P, golden::kPWords); }},
      {"beta", [](Engine& e) { return check_lengths(e, golden::kBeta, &LengthTables::beta); }},
      {"sigma", [](Engine& e) { return check_lengths(e, golden::kSigma, &LengthTables::sigma); }},
      {"tau", [](Engine& e) { return check_lengths(e, golden::kTau, &LengthTables::tau); }},
      {"iota", check_iota},
      {"V, Q and R sets", check_sets},
      {"nu", [](Engine& e) { return check_constants(e, Constant::Nu); }},
      {"epsilon", [](Engine& e) { return check_constants(e, Constant::Epsilon); }},
      {"first occurrences", check_first_occurrences},
  };
  std::vector<TableCheck> out;
  for (auto& [name, fn] : checks) {
    TableCheck tc{name, false, {}};
    try {
      tc.detail = fn(engine);
      tc.passed = tc.detail.empty();
    } catch (const std::exception& e) {
      tc.detail = e.what();
    }
    out.push_back(std::move(tc));
  }
  return out;
}

}  // namespace gijswijt
