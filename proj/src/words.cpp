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
#include "gijswijt/words.hpp"

#include <algorithm>
#include <limits>

#include "gijswijt/nat.hpp"

namespace gijswijt {

std::string render(std::span<const Symbol> w) {
  bool small = std::all_of(w.begin(), w.end(), [](Symbol s) { return s < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (small) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      Nat v = parse_nat(text.substr(pos, next - pos));
      if (v < 1 || v > std::numeric_limits<Symbol>::max()) {
        throw InvalidArgument("symbol out of range: " + v.str());
      }
      w.push_back(static_cast<Symbol>(v));
      pos = next + 1;
    }
    return w;
  }
  for (char c : text) {
    if (c < '1' || c > '9') throw InvalidArgument("bad symbol in word: " + text);
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

Curl curling_number(std::span<const Symbol> w) {
  const std::uint64_t n = w.size();
  if (n == 0) return {1, 0};
  Curl best{1, 1};
  for (std::uint64_t p = 1; 2 * p <= n; ++p) {
    std::uint64_t run = 0;
    while (run + p < n && w[n - 1 - run] == w[n - 1 - run - p]) ++run;
    std::uint64_t k = 1 + run / p;
    if (k > best.k) best = {k, p};
  }
  return best;
}

Symbol next_term(Symbol m, std::span<const Symbol> prefix) {
  std::uint64_t k = curling_number(prefix).k;
  return static_cast<Symbol>(std::max<std::uint64_t>(m, k));
}

void CurlingTracker::schedule(std::uint64_t p, std::uint64_t when) {
  if (wake_.size() <= when) wake_.resize(when + 1 + when / 2);
  wake_[when].push_back(p);
}

std::uint64_t CurlingTracker::push(Symbol s) {
  w_.push_back(s);
  const std::uint64_t n = w_.size() - 1;
  if (n % 2 == 0) {
    const std::uint64_t p = n / 2;
    runs_.resize(p + 1);
    runs_[p] = {p + 1, p};
    schedule(p, n);
  }

  std::uint64_t k = 1;
  std::size_t kept = 0;
  for (std::uint64_t p : active_) {
    Run& r = runs_[p];
    if (w_[n] == w_[n - p]) {
      r.verified = n;
      k = std::max(k, 1 + (n - r.start + 1) / p);
      active_[kept++] = p;
    } else {
      r.start = n + 1;
      r.verified = n;
      schedule(p, n + p);
    }
  }
  active_.resize(kept);

  if (n < wake_.size()) {
    std::vector<std::uint64_t> due;
    due.swap(wake_[n]);
    for (std::uint64_t p : due) {
      Run& r = runs_[p];
      const std::uint64_t low = std::max(r.verified + 1, r.start);
      std::uint64_t mismatch = 0;
      for (std::uint64_t i = n; i >= low; --i) {
        if (w_[i] != w_[i - p]) {
          mismatch = i;
          break;
        }
      }
      r.verified = n;
      if (mismatch) {
        r.start = mismatch + 1;
        schedule(p, mismatch + p);
        continue;
      }
      active_.push_back(p);
      k = std::max(k, 1 + (n - r.start + 1) / p);
    }
  }
  return k;
}

Word naive_sequence(Symbol m, std::uint64_t n_terms, std::uint64_t max_length) {
  if (m < 1) throw InvalidArgument("level must be at least 1");
  if (n_terms < 1) throw InvalidArgument("n_terms must be at least 1");
  if (n_terms > max_length) {
    throw CapExceeded("naive generation above the configured cap; use the structural engine",
                      Nat(n_terms));
  }
  Word out;
  out.reserve(n_terms);
  CurlingTracker tracker;
  Symbol next = m;
  while (out.size() < n_terms) {
    out.push_back(next);
    std::uint64_t k = tracker.push(next);
    if (k > std::numeric_limits<Symbol>::max()) throw Error("symbol overflow");
    next = static_cast<Symbol>(std::max<std::uint64_t>(m, k));
  }
  return out;
}

std::uint64_t count_occurrences(std::span<const Symbol> w, Symbol s) {
  return static_cast<std::uint64_t>(std::count(w.begin(), w.end(), s));
}

}  // namespace gijswijt
