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
#include "gijswijt/digits.hpp"

#include <gmp.h>

#include <algorithm>
#include <string>

namespace gijswijt {

namespace {

void check_base(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("base must be at least 2");
}

std::uint64_t char_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint64_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::uint64_t>(c - 'a' + 10);
  return static_cast<std::uint64_t>(c - 'A' + 10);
}

}  // namespace

Nat DigitVector::value() const { return from_digits(base, digits); }

DigitVector to_digits(std::uint64_t base, const Nat& n) {
  check_base(base);
  DigitVector out;
  out.base = base;
  if (n == 0) return out;
  if (base <= 36) {
    std::string s(mpz_sizeinbase(n.backend().data(), static_cast<int>(base)) + 2, '\0');
    mpz_get_str(s.data(), static_cast<int>(base), n.backend().data());
    s.resize(std::char_traits<char>::length(s.c_str()));
    out.digits.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.digits.push_back(char_digit(*it));
    return out;
  }
  Nat x = n;
  while (x > 0) {
    out.digits.push_back(static_cast<std::uint64_t>(
        mpz_fdiv_q_ui(x.backend().data(), x.backend().data(), static_cast<unsigned long>(base))));
  }
  return out;
}

Nat from_digits(std::uint64_t base, const std::vector<std::uint64_t>& digits) {
  check_base(base);
  bool fits = base <= 36 && std::all_of(digits.begin(), digits.end(),
                                        [base](std::uint64_t d) { return d < base; });
  if (fits && !digits.empty()) {
    static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string s(digits.size(), '0');
    for (std::size_t i = 0; i < digits.size(); ++i) s[digits.size() - 1 - i] = alphabet[digits[i]];
    Nat r;
    mpz_set_str(r.backend().data(), s.c_str(), static_cast<int>(base));
    return r;
  }
  Nat r = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = r * base + *it;
  return r;
}

std::uint64_t ord(std::uint64_t m, const Nat& n) {
  check_base(m);
  if (n <= 0) throw InvalidArgument("ord is undefined for 0");
  Nat rest;
  Nat b = m;
  return mpz_remove(rest.backend().data(), n.backend().data(), b.backend().data());
}

std::uint64_t ord(std::uint64_t m, std::uint64_t n) {
  check_base(m);
  if (n == 0) throw InvalidArgument("ord is undefined for 0");
  std::uint64_t z = 0;
  while (n % m == 0) {
    n /= m;
    ++z;
  }
  return z;
}

std::uint64_t maxdigit(std::uint64_t m, const Nat& n) {
  auto d = to_digits(m, n);
  return d.digits.empty() ? 0 : *std::max_element(d.digits.begin(), d.digits.end());
}

Nat chi(std::uint64_t m, const Nat& n) { return from_digits(m + 1, to_digits(m, n).digits); }

std::vector<std::uint64_t> ruler_prefix(std::uint64_t m, std::uint64_t n_terms) {
  check_base(m);
  std::vector<std::uint64_t> out;
  out.reserve(n_terms);
  for (std::uint64_t i = 1; i <= n_terms; ++i) out.push_back(ord(m, i));
  return out;
}

bool in_pair_set(std::uint64_t m, const Nat& a, const Nat& b) {
  check_base(m);
  if (a <= 0 || b <= 0 || a >= b) return false;
  auto da = to_digits(m, a).digits;
  auto db = to_digits(m, b).digits;
  std::size_t len = std::max(da.size(), db.size());
  da.resize(len, 0);
  db.resize(len, 0);
  std::size_t differing = 0;
  std::size_t y = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (da[i] != db[i]) {
      ++differing;
      y = i;
    }
  }
  return differing == 1 && 2 * da[y] >= db[y];
}

}  // namespace gijswijt
