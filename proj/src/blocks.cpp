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
#include "gijswijt/blocks.hpp"

#include <limits>
#include <string>

#include "gijswijt/digits.hpp"

namespace gijswijt {

namespace {

using Lock = std::lock_guard<std::recursive_mutex>;

void check_index(std::uint64_t m, std::uint64_t t) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
  if (t < 1) throw InvalidArgument("block index must be at least 1");
}

char kind_letter(BlockKind k) {
  switch (k) {
    case BlockKind::B:
      return 'B';
    case BlockKind::S:
      return 'S';
    case BlockKind::T:
      return 'T';
    case BlockKind::P:
      return 'P';
  }
  return '?';
}

void append_repeated(Word& out, const Word& w, std::uint64_t times) {
  for (std::uint64_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
}

Symbol as_symbol(std::uint64_t m) {
  if (m > std::numeric_limits<Symbol>::max()) throw Error("symbol overflow");
  return static_cast<Symbol>(m);
}

}  // namespace

Glue glue_classify(IotaEngine& iota, std::uint64_t m, std::uint64_t t) {
  check_index(m, t);
  Nat here = iota.iota(m, t);
  Glue g;
  g.u = ord(m + 1, Nat(here + 1)) + 1;
  g.plus_one = iota.iota(m, t + 1) == here + 2;
  return g;
}

const Nat& LengthTables::tau_ref(std::uint64_t m, std::uint64_t t) {
  Level& lv = levels_[m];
  while (lv.tau.size() < t) {
    std::uint64_t i = lv.tau.size() + 1;
    auto d = to_digits(m + 1, iota_.iota(m, i)).digits;
    Nat sum = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j]) sum += beta(m + 1, j + 1) * d[j];
    }
    lv.tau.push_back(sum);
  }
  return lv.tau[t - 1];
}

Nat LengthTables::tau(std::uint64_t m, std::uint64_t t) {
  check_index(m, t);
  Lock lock(mu_);
  return tau_ref(m, t);
}

Nat LengthTables::sigma(std::uint64_t m, std::uint64_t t) {
  check_index(m, t);
  Lock lock(mu_);
  Nat next = tau_ref(m, t + 1);
  return next - tau_ref(m, t);
}

Nat LengthTables::beta(std::uint64_t m, std::uint64_t t) {
  check_index(m, t);
  Lock lock(mu_);
  Level& lv = levels_[m];
  if (lv.beta.size() < t) tau_ref(m, t);
  while (lv.beta.size() < t) {
    std::uint64_t i = lv.beta.size();
    Nat s = lv.tau[i] - lv.tau[i - 1];
    lv.beta.push_back(lv.beta.back() * (m + 1) + s);
  }
  return lv.beta[t - 1];
}

Nat LengthTables::rho(std::uint64_t m, std::uint64_t n) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
  Nat r = 1;
  for (std::uint64_t i = 1; i <= n; ++i) r += beta(m + 1, i) + sigma(m + 1, i);
  return r;
}

Nat LengthTables::pi_length(std::uint64_t m, const Nat& a) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
  if (a < 0) throw InvalidArgument("negative argument");
  auto d = to_digits(m + 1, a).digits;
  Nat sum = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j]) sum += beta(m, j + 1) * d[j];
  }
  return sum;
}

Nat LengthTables::length_of(const BlockId& id) {
  check_index(id.m, id.t);
  switch (id.kind) {
    case BlockKind::B:
      return beta(id.m, id.t);
    case BlockKind::S:
      return sigma(id.m, id.t);
    case BlockKind::T:
      return tau(id.m, id.t);
    case BlockKind::P: {
      Nat r = 1;
      for (std::uint64_t i = 1; i < id.t; ++i) r += beta(id.m, i) + sigma(id.m, i);
      return r;
    }
  }
  return 0;
}

void WordBuilder::check_cap(const BlockId& id, std::uint64_t cap) {
  Nat len = lengths_.length_of(id);
  if (len > cap) {
    throw CapExceeded(std::string(1, kind_letter(id.kind)) + " word of length " + len.str() +
                          " exceeds cap " + std::to_string(cap),
                      len);
  }
}

const Word& WordBuilder::b_word(std::uint64_t m, std::uint64_t t) {
  auto key = std::make_pair(m, t);
  auto it = b_cache_.find(key);
  if (it != b_cache_.end()) return it->second;
  Word w;
  if (t == 1) {
    w.push_back(as_symbol(m));
  } else {
    Word prev = b_word(m, t - 1);
    append_repeated(w, prev, m + 1);
    Word glue = s_word(m, t - 1);
    w.insert(w.end(), glue.begin(), glue.end());
  }
  return b_cache_.emplace(key, std::move(w)).first->second;
}

Word WordBuilder::s_word(std::uint64_t m, std::uint64_t t) {
  Glue g = glue_classify(lengths_.iota(), m, t);
  Word w = p_word(m + 1, g.u);
  if (g.plus_one) w.push_back(as_symbol(m + 1));
  return w;
}

Word WordBuilder::p_word(std::uint64_t m, std::uint64_t t) {
  Word w{as_symbol(m)};
  for (std::uint64_t i = 1; i < t; ++i) {
    const Word& b = b_word(m, i);
    w.insert(w.end(), b.begin(), b.end());
    Word s = s_word(m, i);
    w.insert(w.end(), s.begin(), s.end());
  }
  return w;
}

Word WordBuilder::t_word(std::uint64_t m, std::uint64_t t) {
  auto d = to_digits(m + 1, lengths_.iota().iota(m, t)).digits;
  Word w;
  for (std::size_t j = d.size(); j-- > 0;) append_repeated(w, b_word(m + 1, j + 1), d[j]);
  return w;
}

Word WordBuilder::word_of(const BlockId& id, std::uint64_t cap) {
  check_cap(id, cap);
  switch (id.kind) {
    case BlockKind::B:
      return b_word(id.m, id.t);
    case BlockKind::S:
      return s_word(id.m, id.t);
    case BlockKind::T:
      return t_word(id.m, id.t);
    case BlockKind::P:
      return p_word(id.m, id.t);
  }
  return {};
}

Word WordBuilder::pi_word(std::uint64_t m, const Nat& a, std::uint64_t cap) {
  Nat len = lengths_.pi_length(m, a);
  if (len > cap) {
    throw CapExceeded("pi word of length " + len.str() + " exceeds cap " + std::to_string(cap),
                      len);
  }
  auto d = to_digits(m + 1, a).digits;
  Word w;
  for (std::size_t j = d.size(); j-- > 0;) append_repeated(w, b_word(m, j + 1), d[j]);
  return w;
}

Word WordBuilder::glue_by_difference(std::uint64_t m, std::uint64_t t, std::uint64_t cap) {
  check_cap({m, t, BlockKind::S}, cap);
  Word longer = t_word(m, t + 1);
  Nat shorter = lengths_.tau(m, t);
  return Word(longer.begin() + static_cast<std::ptrdiff_t>(shorter), longer.end());
}

Word WordBuilder::sequence_prefix(std::uint64_t m, std::uint64_t n_terms) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
  std::uint64_t t = 1;
  while (lengths_.beta(m, t) < n_terms) ++t;
  Word w = b_word(m, t);
  w.resize(n_terms);
  return w;
}

}  // namespace gijswijt
