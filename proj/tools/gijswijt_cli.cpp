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
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gijswijt/gijswijt.h"
#include "json.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kBadArgs = 2,
  kCap = 3,
  kInfeasible = 4,
  kBound = 5,
};

enum class Format { Plain, BFile, JsonLines };

struct Failure {
  int code;
};

int exit_code(gj_status s) {
  switch (s) {
    case GJ_OK:
      return kOk;
    case GJ_INVALID_ARGUMENT:
      return kBadArgs;
    case GJ_CAP_EXCEEDED:
      return kCap;
    case GJ_INFEASIBLE:
      return kInfeasible;
    case GJ_INSUFFICIENT_BOUND:
      return kBound;
    default:
      return kInternal;
  }
}

class Session {
 public:
  explicit Session(const gj_config& cfg) : ctx_(gj_context_create(&cfg)) {
    if (!ctx_) {
      std::cerr << "error: cannot create context\n";
      throw Failure{kInternal};
    }
  }
  ~Session() { gj_context_destroy(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  gj_context* get() { return ctx_; }

  void check(gj_status s) {
    if (s == GJ_OK) return;
    std::cerr << "error: " << gj_last_error(ctx_);
    if (s == GJ_INSUFFICIENT_BOUND) {
      std::cerr << " (needs bound " << gj_last_error_required(ctx_) << ")";
    }
    std::cerr << "\n";
    throw Failure{exit_code(s)};
  }

 private:
  gj_context* ctx_;
};

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  gj_string_free(s);
  return out;
}

std::vector<std::uint64_t> take(uint64_t* p, size_t n) {
  std::vector<std::uint64_t> v(p, p + n);
  gj_u64_free(p);
  return v;
}

std::vector<std::uint32_t> take(uint32_t* p, size_t n) {
  std::vector<std::uint32_t> v(p, p + n);
  gj_symbols_free(p);
  return v;
}

// Numbers beyond 64 bits stay strings.
nlohmann::json json_value(const std::string& v) {
  std::uint64_t x = 0;
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec == std::errc() && end == v.data() + v.size()) return x;
  return v;
}

// Writes a 1-indexed sequence of values.
class SequenceWriter {
 public:
  SequenceWriter(Format f, std::string name) : format_(f), name_(std::move(name)) {}

  void write(const std::vector<std::string>& values, bool concat_plain) {
    switch (format_) {
      case Format::Plain:
        if (concat_plain) {
          for (const auto& v : values) std::cout << v;
          std::cout << '\n';
        } else {
          for (size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i];
          std::cout << '\n';
        }
        break;
      case Format::BFile:
        for (size_t i = 0; i < values.size(); ++i) std::cout << i + 1 << ' ' << values[i] << '\n';
        break;
      case Format::JsonLines:
        for (size_t i = 0; i < values.size(); ++i) {
          nlohmann::json j = {
              {"sequence", name_}, {"index", i + 1}, {"value", json_value(values[i])}};
          std::cout << j.dump() << '\n';
        }
        break;
    }
  }

  template <typename T>
  void write_numbers(const std::vector<T>& v) {
    std::vector<std::string> s;
    s.reserve(v.size());
    bool small = true;
    for (T x : v) {
      s.push_back(std::to_string(x));
      small = small && x < 10;
    }
    write(s, small);
  }

 private:
  Format format_;
  std::string name_;
};

void print_record(Format f, const nlohmann::json& fields, const std::string& plain) {
  if (f == Format::JsonLines) {
    std::cout << fields.dump() << '\n';
  } else {
    std::cout << plain << '\n';
  }
}

gj_block_kind parse_kind(const std::string& k) {
  static const std::map<std::string, gj_block_kind> kinds = {
      {"B", GJ_BLOCK_B}, {"S", GJ_BLOCK_S}, {"T", GJ_BLOCK_T}, {"P", GJ_BLOCK_P}};
  return kinds.at(k);
}

const char* form_name(gj_form f) {
  switch (f) {
    case GJ_FORM_EXACT:
      return "exact";
    case GJ_FORM_FLOOR:
      return "floor";
    default:
      return "tower";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-m Gijswijt sequences, their block structure and constants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(gj_version()));

  gj_config cfg = gj_default_config();
  Format format = Format::Plain;
  const std::map<std::string, Format> formats = {
      {"plain", Format::Plain}, {"bfile", Format::BFile}, {"json-lines", Format::JsonLines}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--max-set-bound", cfg.max_set_bound, "Largest enumerated set index")
      ->capture_default_str();
  app.add_option("--max-pair-bound", cfg.max_pair_bound, "Largest b enumerated for R")
      ->capture_default_str();
  app.add_option("--digit-budget", cfg.digit_budget, "Decimal digits allowed for exact values")
      ->capture_default_str();
  app.add_option("--max-exact-index", cfg.max_exact_index,
                 "Largest block index built by recurrence")
      ->capture_default_str();

  const CLI::Range kPositive(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());
  std::uint64_t m = 1;
  auto level_opt = [&](CLI::App* sub) {
    return sub->add_option("--m", m, "Level")->check(kPositive)->capture_default_str();
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate the level-m sequence");
  std::uint64_t terms = 0;
  std::string engine = "naive";
  std::uint64_t cap = 50'000'000;
  level_opt(gen);
  gen->add_option("--terms", terms, "Number of terms")->required();
  gen->add_option("--engine", engine, "naive curling oracle or structural block engine")
      ->check(CLI::IsMember({"naive", "structural"}))
      ->capture_default_str();
  gen->add_option("--cap", cap, "Largest term count for the naive engine (0 for the default)")
      ->capture_default_str();

  // blocks
  auto* blocks = app.add_subcommand("blocks", "Block, glue and tail strings and their lengths");
  std::uint64_t t = 1;
  std::string kind = "B";
  std::string table;
  bool length_only = false;
  bool glue = false;
  std::uint64_t word_cap = 1'000'000;
  level_opt(blocks);
  blocks->add_option("--t", t, "Block index, or the table length with --table")->check(kPositive);
  blocks->add_option("--kind", kind, "B, S, T or P")
      ->check(CLI::IsMember({"B", "S", "T", "P"}))
      ->capture_default_str();
  blocks->add_option("--table", table, "Print beta, sigma, tau or rho for 1..t")
      ->check(CLI::IsMember({"beta", "sigma", "tau", "rho"}));
  blocks->add_flag("--length", length_only, "Print the length instead of the word");
  blocks->add_flag("--glue", glue, "Print the glue classification u and the +1 flag of S_t");
  blocks->add_option("--cap", word_cap, "Largest word to materialize")->capture_default_str();

  // iota
  auto* iota = app.add_subcommand("iota", "The iota functions and their images");
  std::string inv, member, expansion;
  std::uint64_t upto = 0;
  std::uint64_t iota_t = 0;
  level_opt(iota);
  auto* iota_t_opt = iota->add_option("--t", iota_t, "Evaluate iota_m(t)")->check(kPositive);
  auto* inv_opt = iota->add_option("--inv", inv, "Evaluate the inverse at p");
  auto* member_opt = iota->add_option("--member", member, "Test image membership of a");
  auto* exp_opt = iota->add_option("--expansion", expansion, "Level expansion of a");
  auto* upto_opt = iota->add_option("--upto", upto, "List iota_m(1..N)");
  for (auto* o : {iota_t_opt, inv_opt, member_opt, exp_opt, upto_opt}) {
    for (auto* other : {iota_t_opt, inv_opt, member_opt, exp_opt, upto_opt}) {
      if (o != other) o->excludes(other);
    }
  }

  // sets
  auto* sets = app.add_subcommand("sets", "Enumerate V_m, Q or R");
  std::string set_name = "V";
  std::uint64_t bound = 100;
  level_opt(sets);
  sets->add_option("--set", set_name, "V, Q or R")
      ->check(CLI::IsMember({"V", "Q", "R"}))
      ->capture_default_str();
  sets->add_option("--bound", bound, "Largest element (largest b for R)")->capture_default_str();

  // constants
  auto* constants = app.add_subcommand("constants", "Certified digits of nu_m or epsilon_m");
  bool want_nu = false, want_eps = false, show_enclosure = false;
  unsigned decimals = 20;
  std::uint64_t approx_n = 0;
  level_opt(constants);
  auto* nu_flag = constants->add_flag("--nu", want_nu, "nu_m");
  auto* eps_flag = constants->add_flag("--epsilon", want_eps, "epsilon_m");
  nu_flag->excludes(eps_flag);
  eps_flag->excludes(nu_flag);
  constants->add_option("--decimals", decimals, "Digits after the point")
      ->check(kPositive)
      ->capture_default_str();
  constants->add_flag("--enclosure", show_enclosure, "Also print the rational enclosure");
  constants->add_option("--approximant", approx_n,
                        "Print the rational approximant of stage n instead");

  // firstocc
  auto* firstocc = app.add_subcommand("firstocc", "First occurrence of n in the level-m sequence");
  std::uint64_t n = 0;
  std::uint64_t pair_n = 0;
  level_opt(firstocc);
  auto* n_opt = firstocc->add_option("--n", n, "Symbol");
  auto* pair_opt =
      firstocc->add_option("--pair", pair_n, "First occurrence of n n in the level-1 sequence");
  n_opt->excludes(pair_opt);
  pair_opt->excludes(n_opt);

  // density
  auto* density = app.add_subcommand("density", "Symbol density enclosures");
  std::uint64_t depth = 40;
  unsigned dens_decimals = 12;
  bool mean = false;
  std::uint64_t dens_n = 0;
  level_opt(density);
  auto* dn = density->add_option("--n", dens_n, "Symbol");
  auto* mean_flag = density->add_flag("--mean", mean, "Mean value of the sequence");
  dn->excludes(mean_flag);
  mean_flag->excludes(dn);
  density->add_option("--depth", depth, "Number of glue terms summed")->capture_default_str();
  density->add_option("--decimals", dens_decimals, "Digits after the point")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Check the built-in reference tables");

  try {
    app.parse(argc, argv);
    auto one_of = [](CLI::App* sub, std::initializer_list<bool> given, const char* names) {
      int count = 0;
      for (bool g : given) count += g ? 1 : 0;
      if (*sub && count != 1) {
        throw CLI::ValidationError(sub->get_name(),
                                   std::string("exactly one of ") + names + " is required");
      }
    };
    one_of(iota,
           {bool(*iota_t_opt), bool(*inv_opt), bool(*member_opt), bool(*exp_opt), bool(*upto_opt)},
           "--t, --inv, --member, --expansion, --upto");
    one_of(constants, {want_nu, want_eps}, "--nu, --epsilon");
    one_of(firstocc, {bool(*n_opt), bool(*pair_opt)}, "--n, --pair");
    one_of(density, {bool(*dn), mean}, "--n, --mean");
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadArgs;
  }

  try {
    Session s(cfg);
    gj_context* ctx = s.get();

    if (*gen) {
      uint32_t* p = nullptr;
      size_t len = 0;
      if (engine == "naive") {
        s.check(gj_naive_sequence(ctx, static_cast<uint32_t>(m), terms, cap, &p, &len));
      } else {
        s.check(gj_structural_sequence(ctx, static_cast<uint32_t>(m), terms, &p, &len));
      }
      SequenceWriter(format, "A(" + std::to_string(m) + ")").write_numbers(take(p, len));
      return kOk;
    }

    if (*blocks) {
      if (!table.empty()) {
        std::vector<std::string> values;
        for (std::uint64_t i = 1; i <= t; ++i) {
          char* out = nullptr;
          if (table == "rho") {
            s.check(gj_rho(ctx, m, i, &out));
          } else {
            gj_block_kind k = table == "beta"    ? GJ_BLOCK_B
                              : table == "sigma" ? GJ_BLOCK_S
                                                 : GJ_BLOCK_T;
            s.check(gj_block_length(ctx, m, i, k, &out));
          }
          values.push_back(take(out));
        }
        SequenceWriter(format, table + "(" + std::to_string(m) + ")").write(values, false);
        return kOk;
      }
      if (glue) {
        uint64_t u = 0;
        int plus_one = 0;
        s.check(gj_glue(ctx, m, t, &u, &plus_one));
        print_record(format, {{"m", m}, {"t", t}, {"u", u}, {"plus_one", plus_one != 0}},
                     std::to_string(u) + (plus_one ? " +1" : ""));
        return kOk;
      }
      if (length_only) {
        char* out = nullptr;
        s.check(gj_block_length(ctx, m, t, parse_kind(kind), &out));
        std::string len = take(out);
        print_record(format, {{"m", m}, {"t", t}, {"kind", kind}, {"length", json_value(len)}},
                     len);
        return kOk;
      }
      uint32_t* p = nullptr;
      size_t len = 0;
      s.check(gj_block_word(ctx, m, t, parse_kind(kind), word_cap, &p, &len));
      SequenceWriter(format, kind + "(" + std::to_string(m) + "," + std::to_string(t) + ")")
          .write_numbers(take(p, len));
      return kOk;
    }

    if (*iota) {
      if (*upto_opt) {
        std::vector<std::string> values;
        for (std::uint64_t i = 1; i <= upto; ++i) {
          char* out = nullptr;
          s.check(gj_iota(ctx, m, i, &out));
          values.push_back(take(out));
        }
        SequenceWriter(format, "iota(" + std::to_string(m) + ")").write(values, false);
      } else if (*iota_t_opt) {
        char* out = nullptr;
        s.check(gj_iota(ctx, m, iota_t, &out));
        std::string v = take(out);
        print_record(format, {{"m", m}, {"t", iota_t}, {"iota", json_value(v)}}, v);
      } else if (*inv_opt) {
        char* out = nullptr;
        s.check(gj_iota_inv(ctx, m, inv.c_str(), &out));
        std::string v = take(out);
        print_record(format, {{"m", m}, {"p", inv}, {"iota_inv", json_value(v)}}, v);
      } else if (*member_opt) {
        int yes = 0;
        s.check(gj_in_image(ctx, m, member.c_str(), &yes));
        print_record(format, {{"m", m}, {"a", member}, {"member", yes != 0}}, yes ? "yes" : "no");
      } else {
        char* out = nullptr;
        uint64_t start = 0;
        s.check(gj_level_expansion(ctx, m, expansion.c_str(), &start, &out));
        std::string v = take(out);
        print_record(format, {{"m", m}, {"a", expansion}, {"start_level", start}, {"terms", v}}, v);
      }
      return kOk;
    }

    if (*sets) {
      uint64_t* p = nullptr;
      size_t len = 0;
      if (set_name == "R") {
        s.check(gj_r_set(ctx, bound, &p, &len));
        auto flat = take(p, 2 * len);
        std::vector<std::string> pairs;
        for (size_t i = 0; i < len; ++i) {
          pairs.push_back(
              format == Format::Plain
                  ? "(" + std::to_string(flat[2 * i]) + "," + std::to_string(flat[2 * i + 1]) + ")"
                  : std::to_string(flat[2 * i]) + " " + std::to_string(flat[2 * i + 1]));
        }
        SequenceWriter(format, "R").write(pairs, false);
        return kOk;
      }
      std::string name = set_name == "Q" ? "Q" : "V" + std::to_string(m);
      if (set_name == "Q") {
        s.check(gj_q_set(ctx, bound, &p, &len));
      } else {
        s.check(gj_v_set(ctx, m, bound, &p, &len));
      }
      auto v = take(p, len);
      std::vector<std::string> values;
      for (auto x : v) values.push_back(std::to_string(x));
      SequenceWriter(format, name).write(values, false);
      return kOk;
    }

    if (*constants) {
      gj_constant which = want_nu ? GJ_NU : GJ_EPSILON;
      std::string name = std::string(want_nu ? "nu" : "epsilon") + std::to_string(m);
      if (approx_n) {
        char *num = nullptr, *den = nullptr, *gap = nullptr;
        int sign = 0;
        s.check(gj_approximant(ctx, which, m, approx_n, &num, &den, &gap, &sign));
        std::string a = take(num), b = take(den), g = take(gap);
        print_record(format,
                     {{"constant", name},
                      {"n", approx_n},
                      {"numerator", a},
                      {"denominator", b},
                      {"sign", sign},
                      {"gap_bound", g}},
                     a + "/" + b + "\nsign " + std::to_string(sign) + "\ngap < " + g);
        return kOk;
      }
      char *digits = nullptr, *lo = nullptr, *hi = nullptr;
      s.check(gj_constant_digits(ctx, which, m, decimals, &digits, &lo, &hi));
      std::string d = take(digits), l = take(lo), h = take(hi);
      std::string plain = show_enclosure ? d + "\n" + l + "\n" + h : d;
      print_record(
          format, {{"constant", name}, {"decimals", decimals}, {"digits", d}, {"lo", l}, {"hi", h}},
          plain);
      return kOk;
    }

    if (*firstocc) {
      if (*pair_opt) {
        char *start = nullptr, *end = nullptr;
        s.check(gj_first_pair(ctx, pair_n, &start, &end));
        std::string a = take(start), b = take(end);
        print_record(format, {{"n", pair_n}, {"start", json_value(a)}, {"end", json_value(b)}},
                     a + " " + b);
        return kOk;
      }
      gj_form tf = GJ_FORM_EXACT, pf = GJ_FORM_EXACT;
      char *tout = nullptr, *pout = nullptr;
      s.check(gj_t_first(ctx, m, n, &tf, &tout));
      std::string tv = take(tout);
      s.check(gj_phi(ctx, m, n, &pf, &pout));
      std::string pv = take(pout);
      print_record(format,
                   {{"m", m},
                    {"n", n},
                    {"t", json_value(tv)},
                    {"t_form", form_name(tf)},
                    {"phi", json_value(pv)},
                    {"phi_form", form_name(pf)}},
                   tv + "\n" + pv);
      return kOk;
    }

    if (*density) {
      char *lo = nullptr, *hi = nullptr;
      int certified = 0;
      if (mean) {
        s.check(gj_mean_value(ctx, m, depth, dens_decimals, &lo, &hi));
      } else {
        s.check(gj_density(ctx, m, dens_n, depth, dens_decimals, &lo, &hi, &certified));
      }
      std::string l = take(lo), h = take(hi);
      nlohmann::json j = {{"m", m}, {"lo", l}, {"hi", h}, {"certified", certified != 0}};
      if (!mean) j["n"] = dens_n;
      print_record(format, j, l + " " + h + (certified ? "" : " (estimate)"));
      return kOk;
    }

    if (*verify) {
      struct Sink {
        Format f;
      } sink{format};
      int all = 0;
      s.check(gj_verify(
          ctx,
          [](const char* name, int passed, const char* detail, void* user) {
            auto* out = static_cast<Sink*>(user);
            std::string line = std::string(passed ? "PASS " : "FAIL ") + name;
            if (!passed && *detail) line += ": " + std::string(detail);
            print_record(out->f, {{"table", name}, {"passed", passed != 0}, {"detail", detail}},
                         line);
          },
          &sink, &all));
      return all ? kOk : kInternal;
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
