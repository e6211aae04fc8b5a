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
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gijswijt/blocks.hpp"
#include "gijswijt/constants.hpp"
#include "gijswijt/digits.hpp"
#include "gijswijt/engine.hpp"
#include "gijswijt/gijswijt.h"
#include "gijswijt/occurrence.hpp"
#include "gijswijt/verify.hpp"
#include "gijswijt/words.hpp"

namespace gj = gijswijt;

struct gj_context {
  explicit gj_context(const gj::EngineConfig& cfg) : engine(cfg), builder(engine.lengths()) {}
  gj::Engine engine;
  gj::WordBuilder builder;
  std::string error;
  std::string error_length;
  std::uint64_t error_required = 0;
};

namespace {

template <typename F>
gj_status guarded(gj_context* ctx, F&& body) {
  if (!ctx) return GJ_INVALID_ARGUMENT;
  ctx->error.clear();
  ctx->error_length.clear();
  ctx->error_required = 0;
  try {
    body();
    return GJ_OK;
  } catch (const gj::CapExceeded& e) {
    ctx->error = e.what();
    ctx->error_length = e.length().str();
    return GJ_CAP_EXCEEDED;
  } catch (const gj::InsufficientSetBound& e) {
    ctx->error = e.what();
    ctx->error_required = e.required();
    return GJ_INSUFFICIENT_BOUND;
  } catch (const gj::Infeasible& e) {
    ctx->error = e.what();
    return GJ_INFEASIBLE;
  } catch (const gj::InvalidArgument& e) {
    ctx->error = e.what();
    return GJ_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return GJ_INTERNAL;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return GJ_INTERNAL;
  }
}

void require(const void* p) {
  if (!p) throw gj::InvalidArgument("null output pointer");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

template <typename T, typename U>
void put_array(T** out, size_t* len, const std::vector<U>& v) {
  require(out);
  require(len);
  T* p = static_cast<T*>(std::malloc(std::max<size_t>(1, v.size()) * sizeof(T)));
  if (!p) throw std::bad_alloc();
  for (size_t i = 0; i < v.size(); ++i) p[i] = static_cast<T>(v[i]);
  *out = p;
  *len = v.size();
}

gj::BlockKind to_kind(gj_block_kind k) {
  switch (k) {
    case GJ_BLOCK_B:
      return gj::BlockKind::B;
    case GJ_BLOCK_S:
      return gj::BlockKind::S;
    case GJ_BLOCK_T:
      return gj::BlockKind::T;
    case GJ_BLOCK_P:
      return gj::BlockKind::P;
  }
  throw gj::InvalidArgument("unknown block kind");
}

gj::Constant to_constant(gj_constant c) {
  if (c == GJ_NU) return gj::Constant::Nu;
  if (c == GJ_EPSILON) return gj::Constant::Epsilon;
  throw gj::InvalidArgument("unknown constant");
}

gj::Nat parse(const char* s) {
  if (!s) throw gj::InvalidArgument("null number");
  return gj::parse_nat(s);
}

std::string fixed(const gj::Nat& scaled, unsigned decimals) {
  std::string s = scaled.str();
  if (decimals == 0) return s;
  if (s.size() <= decimals) s.insert(0, decimals + 1 - s.size(), '0');
  s.insert(s.size() - decimals, ".");
  return s;
}

// lo rounded down and hi rounded up, so the printed interval still
// contains the enclosure.
void put_outward(const gj::RatEnclosure& e, unsigned decimals, char** lo, char** hi) {
  gj::Rational scale(gj::pow_nat(10, decimals));
  put(lo, fixed(gj::floor_of(e.lo * scale), decimals));
  put(hi, fixed(gj::ceil_of(e.hi * scale), decimals));
}

// Optional on-disk memo for set enumerations, one value (or "a b" pair)
// per line, keyed by the set and its bound.
std::filesystem::path cache_file(const std::string& key) {
  const char* dir = std::getenv("GIJSWIJT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / (key + ".txt");
}

bool cache_read(const std::string& key, std::vector<std::uint64_t>& out) {
  auto path = cache_file(key);
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  std::vector<std::uint64_t> v;
  std::uint64_t x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) return false;
  out = std::move(v);
  return true;
}

void cache_write(const std::string& key, const std::vector<std::uint64_t>& v, int per_line) {
  auto path = cache_file(key);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    for (size_t i = 0; i < v.size(); ++i) {
      out << v[i] << ((i + 1) % per_line == 0 ? '\n' : ' ');
    }
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

template <typename F>
std::vector<std::uint64_t> cached(const std::string& key, int per_line, F&& compute) {
  std::vector<std::uint64_t> v;
  if (cache_read(key, v) && v.size() % per_line == 0) return v;
  v = compute();
  cache_write(key, v, per_line);
  return v;
}

}  // namespace

extern "C" {

const char* gj_version(void) { return "1.0.0"; }

gj_config gj_default_config(void) {
  gj::EngineConfig d;
  return {d.max_set_bound, d.max_pair_bound, d.digit_budget, d.max_exact_index, d.max_refinements};
}

gj_context* gj_context_create(const gj_config* cfg) {
  gj::EngineConfig c;
  if (cfg) {
    c.max_set_bound = cfg->max_set_bound;
    c.max_pair_bound = cfg->max_pair_bound;
    c.digit_budget = cfg->digit_budget;
    c.max_exact_index = cfg->max_exact_index;
    c.max_refinements = cfg->max_refinements;
  }
  try {
    return new gj_context(c);
  } catch (...) {
    return nullptr;
  }
}

void gj_context_destroy(gj_context* ctx) { delete ctx; }

const char* gj_last_error(const gj_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
const char* gj_last_error_length(const gj_context* ctx) {
  return ctx ? ctx->error_length.c_str() : "";
}
uint64_t gj_last_error_required(const gj_context* ctx) { return ctx ? ctx->error_required : 0; }

void gj_string_free(char* s) { std::free(s); }
void gj_symbols_free(uint32_t* s) { std::free(s); }
void gj_u64_free(uint64_t* v) { std::free(v); }

gj_status gj_naive_sequence(gj_context* ctx, uint32_t m, uint64_t n_terms, uint64_t cap,
                            uint32_t** out, size_t* len) {
  return guarded(ctx, [&] {
    put_array(out, len, cap ? gj::naive_sequence(m, n_terms, cap) : gj::naive_sequence(m, n_terms));
  });
}

gj_status gj_structural_sequence(gj_context* ctx, uint32_t m, uint64_t n_terms, uint32_t** out,
                                 size_t* len) {
  return guarded(ctx, [&] { put_array(out, len, ctx->builder.sequence_prefix(m, n_terms)); });
}

gj_status gj_curling_number(gj_context* ctx, const uint32_t* w, size_t len, uint64_t* k,
                            uint64_t* y_len) {
  return guarded(ctx, [&] {
    if (len) require(w);
    require(k);
    gj::Curl c = gj::curling_number(std::span<const gj::Symbol>(w, len));
    *k = c.k;
    if (y_len) *y_len = c.y_len;
  });
}

gj_status gj_ruler(gj_context* ctx, uint64_t m, uint64_t n_terms, uint64_t** out, size_t* len) {
  return guarded(ctx, [&] { put_array(out, len, gj::ruler_prefix(m, n_terms)); });
}

gj_status gj_chi(gj_context* ctx, uint64_t m, const char* n, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, gj::chi(m, parse(n)).str());
  });
}

gj_status gj_block_length(gj_context* ctx, uint64_t m, uint64_t t, gj_block_kind kind, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, ctx->engine.lengths().length_of({m, t, to_kind(kind)}).str());
  });
}

gj_status gj_block_word(gj_context* ctx, uint64_t m, uint64_t t, gj_block_kind kind, uint64_t cap,
                        uint32_t** out, size_t* len) {
  return guarded(ctx,
                 [&] { put_array(out, len, ctx->builder.word_of({m, t, to_kind(kind)}, cap)); });
}

gj_status gj_rho(gj_context* ctx, uint64_t m, uint64_t n, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, ctx->engine.lengths().rho(m, n).str());
  });
}

gj_status gj_glue(gj_context* ctx, uint64_t m, uint64_t t, uint64_t* u, int* plus_one) {
  return guarded(ctx, [&] {
    require(u);
    gj::Glue g = gj::glue_classify(ctx->engine.iota(), m, t);
    *u = g.u;
    if (plus_one) *plus_one = g.plus_one ? 1 : 0;
  });
}

gj_status gj_iota(gj_context* ctx, uint64_t m, uint64_t t, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, ctx->engine.iota().iota(m, t).str());
  });
}

gj_status gj_iota_inv(gj_context* ctx, uint64_t m, const char* p, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, ctx->engine.iota().iota_inv(m, parse(p)).str());
  });
}

gj_status gj_in_image(gj_context* ctx, uint64_t m, const char* a, int* member) {
  return guarded(ctx, [&] {
    require(member);
    *member = ctx->engine.iota().in_image(m, parse(a)) ? 1 : 0;
  });
}

gj_status gj_level_expansion(gj_context* ctx, uint64_t m, const char* a, uint64_t* start_level,
                             char** out) {
  return guarded(ctx, [&] {
    require(out);
    gj::Expansion e = ctx->engine.iota().level_expansion(m, parse(a));
    std::string s;
    for (size_t i = 0; i < e.terms.size(); ++i) {
      if (i) s += ',';
      s += e.terms[i].str();
    }
    if (start_level) *start_level = e.start_level;
    put(out, s);
  });
}

gj_status gj_v_set(gj_context* ctx, uint64_t m, uint64_t bound, uint64_t** out, size_t* len) {
  return guarded(ctx, [&] {
    auto key = "V" + std::to_string(m) + "_" + std::to_string(bound);
    put_array(out, len, cached(key, 1, [&] { return ctx->engine.iota().v_set(m, bound); }));
  });
}

gj_status gj_q_set(gj_context* ctx, uint64_t bound, uint64_t** out, size_t* len) {
  return guarded(ctx, [&] {
    auto key = "Q_" + std::to_string(bound);
    put_array(out, len, cached(key, 1, [&] { return ctx->engine.iota().q_set(bound); }));
  });
}

gj_status gj_r_set(gj_context* ctx, uint64_t b_bound, uint64_t** out, size_t* len) {
  return guarded(ctx, [&] {
    auto key = "R_" + std::to_string(b_bound);
    auto flat = cached(key, 2, [&] {
      std::vector<std::uint64_t> v;
      for (auto [a, b] : ctx->engine.iota().r_set(b_bound)) {
        v.push_back(a);
        v.push_back(b);
      }
      return v;
    });
    put_array(out, len, flat);
    *len /= 2;
  });
}

gj_status gj_constant_digits(gj_context* ctx, gj_constant which, uint64_t m, unsigned decimals,
                             char** digits, char** lo, char** hi) {
  return guarded(ctx, [&] {
    require(digits);
    gj::CertifiedDecimal c = gj::certified_decimal(ctx->engine, to_constant(which), m, decimals);
    std::string l = gj::to_string(c.enclosure.lo);
    std::string h = gj::to_string(c.enclosure.hi);
    put(digits, c.digits);
    put(lo, l);
    put(hi, h);
  });
}

gj_status gj_approximant(gj_context* ctx, gj_constant which, uint64_t m, uint64_t n,
                         char** numerator, char** denominator, char** gap_bound, int* sign) {
  return guarded(ctx, [&] {
    gj::Approximant a = gj::approximant(ctx->engine, to_constant(which), m, n);
    put(numerator, a.numerator.str());
    put(denominator, a.denominator.str());
    put(gap_bound, gj::to_string(a.gap_bound));
    if (sign) *sign = a.sign;
  });
}

gj_status gj_t_first(gj_context* ctx, uint64_t m, uint64_t n, gj_form* form, char** out) {
  return guarded(ctx, [&] {
    require(out);
    gj::TFirst t = gj::t_first(ctx->engine, m, n);
    if (form) *form = std::holds_alternative<gj::Tower>(t) ? GJ_FORM_TOWER : GJ_FORM_EXACT;
    put(out, gj::render(t));
  });
}

gj_status gj_phi(gj_context* ctx, uint64_t m, uint64_t n, gj_form* form, char** out) {
  return guarded(ctx, [&] {
    require(out);
    gj::PhiResult r = gj::phi(ctx->engine, m, n);
    if (form) {
      *form = std::holds_alternative<gj::PhiExact>(r)          ? GJ_FORM_EXACT
              : std::holds_alternative<gj::PhiFloorFormula>(r) ? GJ_FORM_FLOOR
                                                               : GJ_FORM_TOWER;
    }
    put(out, gj::render(r));
  });
}

gj_status gj_epsilon_floor(gj_context* ctx, uint64_t m, uint64_t exponent, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, gj::epsilon_floor(ctx->engine, m, exponent).str());
  });
}

gj_status gj_first_pair(gj_context* ctx, uint64_t n, char** start, char** end) {
  return guarded(ctx, [&] {
    gj::PairPosition p = gj::first_pair_position(ctx->engine, n);
    std::string s = p.start.str();
    std::string e = p.end.str();
    put(start, s);
    put(end, e);
  });
}

gj_status gj_count_in_block(gj_context* ctx, uint64_t m, uint64_t t, uint64_t s, char** out) {
  return guarded(ctx, [&] {
    require(out);
    put(out, gj::count_in_block(ctx->engine, m, t, s).str());
  });
}

gj_status gj_density(gj_context* ctx, uint64_t m, uint64_t n, uint64_t depth, unsigned decimals,
                     char** lo, char** hi, int* certified) {
  return guarded(ctx, [&] {
    gj::DensityEstimate d = gj::density(ctx->engine, m, n, depth);
    put_outward(d.enclosure, decimals, lo, hi);
    if (certified) *certified = d.certified ? 1 : 0;
  });
}

gj_status gj_mean_value(gj_context* ctx, uint64_t m, uint64_t depth, unsigned decimals, char** lo,
                        char** hi) {
  return guarded(ctx, [&] {
    gj::DensityEstimate d = gj::mean_value(ctx->engine, m, depth);
    put_outward(d.enclosure, decimals, lo, hi);
  });
}

gj_status gj_verify(gj_context* ctx, gj_check_fn fn, void* user, int* all_passed) {
  return guarded(ctx, [&] {
    bool ok = true;
    for (const gj::TableCheck& c : gj::verify_golden_tables(ctx->engine)) {
      ok = ok && c.passed;
      if (fn) fn(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
