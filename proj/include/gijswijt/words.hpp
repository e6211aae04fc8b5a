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
#include <span>
#include <string>
#include <vector>

namespace gijswijt {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr std::uint64_t kDefaultNaiveCap = 50'000'000;

struct Curl {
  std::uint64_t k;
  std::uint64_t y_len;
};

// Digits are concatenated when every symbol is below 10, comma separated
// otherwise.
std::string render(std::span<const Symbol> w);
Word parse_word(const std::string& text);

// Direct quadratic scan over every period.
Curl curling_number(std::span<const Symbol> w);

Symbol next_term(Symbol m, std::span<const Symbol> prefix);

// Throws CapExceeded when n_terms is above max_length.
Word naive_sequence(Symbol m, std::uint64_t n_terms, std::uint64_t max_length = kDefaultNaiveCap);

std::uint64_t count_occurrences(std::span<const Symbol> w, Symbol s);

// Curling numbers of all prefixes of a word fed one symbol at a time.
//
// For each period p the tracker keeps the run of positions i with
// w[i] == w[i-p] ending at the current length. Runs shorter than p cannot
// contribute, so a broken run is only looked at again p steps later and
// is then checked backwards from the newest position.
class CurlingTracker {
 public:
  std::uint64_t push(Symbol s);
  std::uint64_t size() const { return w_.size() - 1; }

 private:
  struct Run {
    std::uint64_t start = 0;
    std::uint64_t verified = 0;
  };

  void schedule(std::uint64_t p, std::uint64_t when);

  Word w_{0};
  std::vector<Run> runs_{Run{}};
  std::vector<std::vector<std::uint64_t>> wake_;
  std::vector<std::uint64_t> active_;
};

}  // namespace gijswijt
