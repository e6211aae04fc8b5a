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
#include "gijswijt/nat.hpp"

#include <gmp.h>

#include <algorithm>

namespace gijswijt {

Nat pow_nat(std::uint64_t base, std::uint64_t exp) {
  Nat r;
  Nat b = base;
  mpz_pow_ui(r.backend().data(), b.backend().data(), exp);
  return r;
}

Nat parse_nat(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("not a nonnegative integer: " + std::string(text));
    }
  }
  // A leading zero would select octal in the string constructor.
  text.remove_prefix(std::min(text.find_first_not_of('0'), text.size() - 1));
  return Nat(std::string(text));
}

std::string to_string(const Nat& n) { return n.str(); }

std::string to_string(const Rational& q) {
  return to_string(Nat(numerator(q))) + "/" + to_string(Nat(denominator(q)));
}

std::uint64_t digit_count(std::uint64_t base, const Nat& n) {
  if (n == 0) return 1;
  if (base <= 62) {
    // mpz_sizeinbase may overshoot by one for non power-of-two bases.
    std::uint64_t count = mpz_sizeinbase(n.backend().data(), static_cast<int>(base));
    if (count > 1 && pow_nat(base, count - 1) > n) --count;
    return count;
  }
  Nat x = n;
  Nat b = base;
  std::uint64_t count = 0;
  while (x > 0) {
    x /= b;
    ++count;
  }
  return count;
}

Nat floor_of(const Rational& q) {
  Nat num = numerator(q);
  Nat den = denominator(q);
  Nat r;
  mpz_fdiv_q(r.backend().data(), num.backend().data(), den.backend().data());
  return r;
}

Nat ceil_of(const Rational& q) {
  Nat num = numerator(q);
  Nat den = denominator(q);
  Nat r;
  mpz_cdiv_q(r.backend().data(), num.backend().data(), den.backend().data());
  return r;
}

}  // namespace gijswijt
