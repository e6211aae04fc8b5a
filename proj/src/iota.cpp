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
#include "gijswijt/iota.hpp"

#include <algorithm>
#include <string>

#include "gijswijt/digits.hpp"

namespace gijswijt {

namespace {

using Lock = std::lock_guard<std::recursive_mutex>;

void check_level(std::uint64_t m) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
}

std::uint8_t& slot(std::vector<std::uint8_t>& v, std::uint64_t i) {
  if (v.size() <= i) v.resize(i + 1, 0);
  return v[i];
}

}  // namespace

IotaEngine::IotaEngine(std::uint64_t max_set_bound, std::uint64_t max_pair_bound)
    : max_set_bound_(max_set_bound), max_pair_bound_(max_pair_bound) {}

IotaEngine::Level& IotaEngine::level(std::uint64_t m) { return levels_[m]; }

Expansion IotaEngine::level_expansion(std::uint64_t m, const Nat& a) {
  check_level(m);
  if (a < 1) throw InvalidArgument("level expansion needs a >= 1");
  Lock lock(mu_);
  Expansion e;
  e.start_level = m + 1;
  e.terms.push_back(a);
  std::uint64_t l = m + 1;
  Nat cur = a;
  while (true) {
    std::uint64_t z = ord(l, cur);
    if (z == 0) break;
    cur = iota(l, z + 1);
    e.terms.push_back(cur);
    ++l;
  }
  return e;
}

bool IotaEngine::image_from(std::uint64_t m, std::uint64_t l, Nat a) {
  while (true) {
    auto d = to_digits(l, a).digits;
    std::uint64_t top = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    if (m >= 2) {
      if (top > m) return false;
    } else {
      if (top > 1) return false;
      std::uint64_t first = 0;
      std::uint64_t second = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) {
          first = i + 1;
        } else {
          second = i + 1;
          break;
        }
      }
      if (second && in_pair_set(l + 1, iota(l, first), iota(l, second))) return false;
    }
    if (d.empty() || d[0] != 0) return true;
    std::uint64_t z = 0;
    while (d[z] == 0) ++z;
    a = iota(l, z + 1);
    ++l;
  }
}

bool IotaEngine::in_image(std::uint64_t m, const Nat& a) {
  check_level(m);
  if (a < 0) throw InvalidArgument("negative argument");
  if (a == 0) return true;
  Lock lock(mu_);
  return image_from(m, m + 1, a);
}

Nat IotaEngine::iota(std::uint64_t m, std::uint64_t t) {
  check_level(m);
  if (t < 1) throw InvalidArgument("iota index must be at least 1");
  Lock lock(mu_);
  Level& lv = level(m);
  while (lv.image.size() < t) {
    Nat cand = lv.next;
    lv.next += 1;
    if (cand == 0 || image_from(m, m + 1, cand)) lv.image.push_back(cand);
  }
  return lv.image[t - 1];
}

void IotaEngine::enumerate_through(std::uint64_t m, const Nat& p) {
  Level& lv = level(m);
  while (lv.next <= p) {
    Nat cand = lv.next;
    lv.next += 1;
    if (cand == 0 || image_from(m, m + 1, cand)) lv.image.push_back(cand);
  }
}

Nat IotaEngine::iota_inv_enumerated(std::uint64_t m, const Nat& p) {
  check_level(m);
  if (p < 0) throw InvalidArgument("negative argument");
  Lock lock(mu_);
  enumerate_through(m, p);
  const auto& img = level(m).image;
  return Nat(static_cast<std::uint64_t>(std::upper_bound(img.begin(), img.end(), p) - img.begin()));
}

Nat IotaEngine::iota_inv_formula(std::uint64_t m, const Nat& p) {
  check_level(m);
  if (p < 0) throw InvalidArgument("negative argument");
  Lock lock(mu_);
  Nat sum = 1;
  if (m >= 2) {
    Nat q = p;
    for (std::uint64_t v = 0; q > 0; ++v) {
      Nat next = q / (m + 1);
      if (in_v(m, v)) sum += q - next;
      q = next;
    }
    return sum;
  }
  for (std::uint64_t a = 0; pow_nat(2, a) <= p; ++a) {
    if (in_q(a)) sum += 1;
  }
  for (std::uint64_t b = 1; pow_nat(2, b) < p; ++b) {
    Nat two_b = pow_nat(2, b);
    Nat denom = two_b * 2;
    for (std::uint64_t a = 0; a < b; ++a) {
      if (in_r(a, b)) sum += (p + two_b - pow_nat(2, a)) / denom;
    }
  }
  return sum;
}

Nat IotaEngine::iota_inv(std::uint64_t m, const Nat& p) {
  if (p <= kFormulaThreshold) return iota_inv_enumerated(m, p);
  return iota_inv_formula(m, p);
}

Nat IotaEngine::iota_inv_power(std::uint64_t m, std::uint64_t e) {
  check_level(m);
  Lock lock(mu_);
  if (m >= 2) {
    // 1 + sum over v in V_m, v < e of m*(m+1)^(e-v-1), plus [e in V_m].
    std::vector<std::uint64_t> digits(e, 0);
    for (std::uint64_t v = 0; v < e; ++v) {
      if (in_v(m, v)) digits[e - 1 - v] = 1;
    }
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    Nat sum = 1 + Nat(m) * from_digits(m + 1, digits);
    if (in_v(m, e)) sum += 1;
    return sum;
  }
  Nat sum = 1;
  for (std::uint64_t a = 0; a <= e; ++a) {
    if (in_q(a)) sum += 1;
  }
  Nat acc = 0;
  for (std::uint64_t b = 0; b < e; ++b) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < b; ++a) count += in_r(a, b) ? 1 : 0;
    acc = acc * 2 + count;
  }
  return sum + acc;
}

bool IotaEngine::in_v(std::uint64_t m, std::uint64_t v) {
  if (m < 2) throw InvalidArgument("V_m is defined for m >= 2");
  if (v > max_set_bound_) {
    throw InsufficientSetBound("V_" + std::to_string(m) + " needed up to " + std::to_string(v), v);
  }
  Lock lock(mu_);
  std::uint8_t& s = slot(v_[m], v);
  if (s == 0) {
    // (m+1)^v has the single digit 1; its next expansion term is
    // iota_{m+1}(v+1).
    bool member = v == 0 || image_from(m, m + 2, iota(m + 1, v + 1));
    slot(v_[m], v) = member ? 1 : 2;
    return member;
  }
  return s == 1;
}

bool IotaEngine::in_q(std::uint64_t a) {
  if (a > max_set_bound_) {
    throw InsufficientSetBound("Q needed up to " + std::to_string(a), a);
  }
  Lock lock(mu_);
  std::uint8_t& s = slot(q_, a);
  if (s == 0) {
    bool member = a == 0 || image_from(1, 3, iota(2, a + 1));
    slot(q_, a) = member ? 1 : 2;
    return member;
  }
  return s == 1;
}

bool IotaEngine::in_r(std::uint64_t a, std::uint64_t b) {
  if (a >= b) return false;
  if (b > max_pair_bound_) {
    throw InsufficientSetBound("R needed up to b = " + std::to_string(b), b);
  }
  Lock lock(mu_);
  std::uint8_t& s = slot(r_[b], a);
  if (s == 0) {
    bool member = !in_pair_set(3, iota(2, a + 1), iota(2, b + 1)) && in_q(a);
    slot(r_[b], a) = member ? 1 : 2;
    return member;
  }
  return s == 1;
}

std::vector<std::uint64_t> IotaEngine::v_set(std::uint64_t m, std::uint64_t bound) {
  if (m < 2) throw InvalidArgument("V_m is defined for m >= 2");
  if (bound > max_set_bound_) {
    throw InsufficientSetBound("V_" + std::to_string(m) + " needed up to " + std::to_string(bound),
                               bound);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= bound; ++v) {
    if (in_v(m, v)) out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> IotaEngine::q_set(std::uint64_t bound) {
  if (bound > max_set_bound_) {
    throw InsufficientSetBound("Q needed up to " + std::to_string(bound), bound);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a <= bound; ++a) {
    if (in_q(a)) out.push_back(a);
  }
  return out;
}

PairList IotaEngine::r_set(std::uint64_t b_bound) {
  if (b_bound > max_pair_bound_) {
    throw InsufficientSetBound("R needed up to b = " + std::to_string(b_bound), b_bound);
  }
  PairList out;
  for (std::uint64_t b = 1; b <= b_bound; ++b) {
    for (std::uint64_t a = 0; a < b; ++a) {
      if (in_r(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace gijswijt
