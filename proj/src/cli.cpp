#include "ztile/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ztile/certify.hpp"
#include "ztile/construct.hpp"
#include "ztile/interval.hpp"
#include "ztile/poly.hpp"
#include "ztile/search.hpp"
#include "ztile/tiling.hpp"

namespace ztile {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::int64_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::int64_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) + ": cannot parse '" + item + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument(std::string(flag) + ": cannot parse '" + item + "'");
    out.push_back(value);
  }
  if (out.empty())
    throw std::invalid_argument(std::string(flag) + ": empty integer list");
  return out;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

ojson width_json(const std::optional<std::uint64_t>& v) {
  if (v) return *v;
  return "overflow";
}

std::string width_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "overflow";
}

char label_char(std::size_t index) {
  static const char* alphabet =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return alphabet[index % 62];
}

std::string wrap_strip(const std::string& strip) {
  std::string out;
  for (std::size_t i = 0; i < strip.size(); i += 80) {
    out += strip.substr(i, 80);
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

// Residues labeled by the index of the covering translate.
std::string render_cyclic_cover(const TileSet& tile, const CyclicSet& complement) {
  std::int64_t m = complement.modulus();
  std::string strip(static_cast<std::size_t>(m), '?');
  for (std::size_t idx = 0; idx < complement.elements().size(); ++idx) {
    std::int64_t b = complement.elements()[idx];
    for (std::int64_t a : tile.elements())
      strip[static_cast<std::size_t>((((a % m) + m) % m + b) % m)] = label_char(idx);
  }
  return wrap_strip(strip);
}

std::string render_interval_cover(const IntervalTiling& t) {
  std::string strip(static_cast<std::size_t>(t.n), '?');
  for (std::size_t idx = 0; idx < t.b.size(); ++idx)
    for (std::int64_t a : t.a) {
      std::int64_t x = a + t.b[idx];
      if (x < t.n) strip[static_cast<std::size_t>(x)] = label_char(idx);
    }
  return wrap_strip(strip);
}

struct VerifyArgs {
  std::int64_t modulus = 0;
  std::string tile, complement;
  std::int64_t interval = 0;
  std::string a, b;
  bool render = false;
};

CommandResult cmd_verify_cyclic(const VerifyArgs& args) {
  CommandResult result;
  TileSet tile = normalize_tile(parse_list(args.tile, "--tile"));
  CyclicSet complement(args.modulus, parse_list(args.complement, "--complement"));
  auto witness = cyclic_tiling_witness(tile, complement);
  if (!witness) {
    result.payload = ojson{{"tiling", true}};
    result.human = "tiling: yes (M = " + std::to_string(args.modulus) + ", |A| = " +
                   std::to_string(tile.size()) + ", |B'| = " +
                   std::to_string(complement.size()) + ")";
    if (args.render)
      result.human += "\n" + render_cyclic_cover(tile, complement);
  } else {
    result.status = CliStatus::violation;
    result.payload = ojson{{"tiling", false},
                           {"witness", ojson{{"residue", witness->point},
                                             {"count", witness->count}}}};
    result.human = "tiling: no (residue " + std::to_string(witness->point) +
                   " covered " + std::to_string(witness->count) + " times)";
  }
  return result;
}

CommandResult cmd_verify_interval(const VerifyArgs& args) {
  CommandResult result;
  IntervalTiling t = make_interval_tiling(args.interval, parse_list(args.a, "--a"),
                                          parse_list(args.b, "--b"));
  auto witness = interval_tiling_witness(t);
  if (!witness) {
    result.payload = ojson{{"tiling", true}};
    result.human = "tiling: yes ([" + std::to_string(t.n) + "] = A + B exactly)";
    if (args.render) result.human += "\n" + render_interval_cover(t);
  } else {
    result.status = CliStatus::violation;
    result.payload = ojson{{"tiling", false},
                           {"witness", ojson{{"point", witness->point},
                                             {"count", witness->count}}}};
    result.human = "tiling: no (point " + std::to_string(witness->point) +
                   " covered " + std::to_string(witness->count) + " times)";
  }
  return result;
}

CommandResult cmd_period(std::int64_t modulus, const std::string& set_text) {
  CyclicSet s(modulus, parse_list(set_text, "--set"));
  std::int64_t period = least_period_cyclic(s);
  bool periodic = is_periodic_mod(s);
  CommandResult result;
  result.payload = ojson{{"least_period", period}, {"periodic_mod_M", periodic}};
  result.human = "least period: " + std::to_string(period) + " (modulus " +
                 std::to_string(modulus) + ") — " +
                 (periodic ? "periodic" : "not periodic");
  return result;
}

ojson construction_payload(std::int64_t diameter, const CyclicTiling& tiling,
                           std::int64_t period, bool quadratic,
                           const std::optional<PrimePair>& primes) {
  ojson payload;
  payload["D"] = diameter;
  payload["p"] = primes ? ojson(primes->p) : ojson(nullptr);
  payload["q"] = primes ? ojson(primes->q) : ojson(nullptr);
  payload["M"] = tiling.modulus();
  payload["tile"] = tiling.tile().elements();
  payload["complement"] = tiling.complement().elements();
  payload["least_period"] = period;
  payload["mode"] = quadratic ? "quadratic" : "fallback";
  return payload;
}

std::string construction_human(const ojson& payload, bool render,
                               const CyclicTiling& tiling) {
  std::ostringstream out;
  out << "mode: " << payload["mode"].get<std::string>() << "\n";
  if (!payload["p"].is_null())
    out << "p = " << payload["p"] << ", q = " << payload["q"] << "\n";
  out << "M = " << payload["M"] << "\n";
  out << "tile (" << tiling.tile().size() << " elements, diameter "
      << tiling.tile().diameter() << "): " << join(tiling.tile().elements(), " ")
      << "\n";
  out << "complement (" << tiling.complement().size()
      << " elements): " << join(tiling.complement().elements(), " ") << "\n";
  out << "least period: " << payload["least_period"];
  std::string text = out.str();
  if (render) text += "\n" + render_cyclic_cover(tiling.tile(), tiling.complement());
  return text;
}

CommandResult cmd_construct(std::int64_t diameter, bool force_quadratic, bool render) {
  CommandResult result;
  if (force_quadratic) {
    auto main = construct_long_period(diameter);
    if (!main) {
      result.status = CliStatus::error;
      result.message = "the quadratic construction needs diameter >= 388 "
                       "(smallest prime pair costs 24*7 + 20*11); got " +
                       std::to_string(diameter);
      return result;
    }
    CyclicTiling tiling(main->tile, main->complement);
    result.payload = construction_payload(diameter, tiling, main->modulus, true,
                                          PrimePair{main->p, main->q});
    result.human = construction_human(result.payload, render, tiling);
    return result;
  }
  BestConstruction best = construct_best(diameter);
  result.payload = construction_payload(diameter, best.tiling, best.least_period,
                                        best.quadratic, best.primes);
  result.human = construction_human(result.payload, render, best.tiling);
  return result;
}

CommandResult cmd_certify(const std::string& tile_text,
                          std::optional<std::int64_t> modulus) {
  TileSet tile = normalize_tile(parse_list(tile_text, "--tile"));
  Certificate cert = certificate(tile);
  CommandResult result;
  result.payload = ojson{{"tile", cert.tile.elements()},
                         {"s_list", cert.s_list},
                         {"phi_sum", cert.phi_sum},
                         {"t_lcm", width_json(cert.t_lcm)},
                         {"t_prod", width_json(cert.t_prod)},
                         {"newman_cap", width_json(cert.newman_cap)}};
  std::ostringstream out;
  out << "tile: " << join(tile.elements(), " ") << "\n";
  out << "s_list: " << (cert.s_list.empty() ? "(empty)" : join(cert.s_list, " "))
      << "\n";
  out << "phi_sum: " << cert.phi_sum << "\n";
  out << "t_lcm: " << width_text(cert.t_lcm) << "\n";
  out << "t_prod: " << width_text(cert.t_prod) << "\n";
  out << "newman_cap: " << width_text(cert.newman_cap);
  if (modulus) {
    std::int64_t forced = forced_period(tile, *modulus);
    result.payload["forced_period"] = forced;
    out << "\nforced_period mod " << *modulus << ": " << forced;
  }
  result.human = out.str();
  return result;
}

ojson decomposition_json(const LongDecomposition& d) {
  return ojson{{"n", d.n},
               {"m", d.m},
               {"E", d.e},
               {"D", d.dset},
               {"scaled_side", d.scaled_side == Side::A ? "A" : "B"}};
}

CommandResult cmd_decompose(std::int64_t n, const std::string& a_text,
                            const std::string& b_text, bool tree) {
  CommandResult result;
  IntervalTiling t = make_interval_tiling(n, parse_list(a_text, "--a"),
                                          parse_list(b_text, "--b"));
  if (auto witness = interval_tiling_witness(t)) {
    result.status = CliStatus::violation;
    result.payload = ojson{{"tiling", false},
                           {"witness", ojson{{"point", witness->point},
                                             {"count", witness->count}}}};
    result.human = "not a tiling: point " + std::to_string(witness->point) +
                   " covered " + std::to_string(witness->count) + " times";
    return result;
  }
  if (n <= 1) {
    result.status = CliStatus::error;
    result.message = "decompose: n > 1 required";
    return result;
  }
  if (!tree) {
    LongDecomposition d = long_decompose(t);
    result.payload = decomposition_json(d);
    result.human = "n: " + std::to_string(d.n) + "\nm: " + std::to_string(d.m) +
                   "\nscaled_side: " + (d.scaled_side == Side::A ? "A" : "B") +
                   "\nE: " + join(d.e, " ") + "\nD: " + join(d.dset, " ");
    return result;
  }
  std::vector<LongDecomposition> chain = decomposition_tree(t);
  // Nest the chain innermost-last.
  ojson nested;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    ojson node = decomposition_json(*it);
    node["child"] = nested.is_null() ? ojson(nullptr) : nested;
    nested = std::move(node);
  }
  result.payload = nested;
  std::ostringstream out;
  out << "decomposition chain (" << chain.size() << " levels):";
  for (const auto& d : chain) {
    out << "\n  n=" << d.n << " m=" << d.m << " side="
        << (d.scaled_side == Side::A ? "A" : "B") << " E={" << join(d.e, " ")
        << "} D={" << join(d.dset, " ") << "}";
  }
  result.human = out.str();
  return result;
}

std::int64_t search_guard_from_env() {
  const char* env = std::getenv("ZTILE_GUARD_D");
  if (!env) return 8;
  try {
    std::size_t pos = 0;
    std::int64_t value = std::stoll(env, &pos);
    if (pos == std::string(env).size() && value >= 1) return value;
  } catch (const std::exception&) {
  }
  return 8;
}

CommandResult cmd_search(std::int64_t max_diameter, bool unpruned,
                         std::optional<std::int64_t> cap, int jobs) {
  SearchOptions opts;
  opts.cap = cap;
  opts.unpruned = unpruned;
  opts.jobs = jobs;
  opts.guard = search_guard_from_env();
  std::vector<SearchWitness> rows = emit_table(max_diameter, opts);

  CommandResult result;
  result.jsonl = true;
  result.payload = ojson::array();
  for (const SearchWitness& row : rows) {
    result.payload.push_back(ojson{{"D", row.diameter},
                                   {"T", row.value},
                                   {"tile", row.tile.elements()},
                                   {"modulus", row.complement.modulus()},
                                   {"complement", row.complement.elements()},
                                   {"exact", row.exact}});
  }

  std::ostringstream out;
  out << "D   T(D)  tile            M     complement                exact\n";
  for (const SearchWitness& row : rows) {
    std::string tile = join(row.tile.elements());
    std::string comp = join(row.complement.elements());
    char line[256];
    std::snprintf(line, sizeof(line), "%-3lld %-5lld %-15s %-5lld %-25s %s",
                  static_cast<long long>(row.diameter),
                  static_cast<long long>(row.value), tile.c_str(),
                  static_cast<long long>(row.complement.modulus()), comp.c_str(),
                  row.exact ? "yes" : "lower-bound");
    out << line << "\n";
  }
  std::string table = out.str();
  table.pop_back();
  result.human = table;
  return result;
}

CommandResult cmd_cyclotomic(std::int64_t n) {
  IntPoly phi = cyclotomic(n);
  CommandResult result;
  result.payload = ojson{{"n", n}, {"degree", phi.degree()}, {"coeffs", phi.coeffs()}};
  result.human = "Phi_" + std::to_string(n) + "(x) = " + phi.to_string() +
                 " (degree " + std::to_string(phi.degree()) + ")";
  return result;
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"ztile — translational tilings of Z and Z_M: verification, periods,\n"
               "cyclotomic certificates, long-period constructions, interval\n"
               "decompositions, and exhaustive extremal search"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit JSON instead of text");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check a tiling of Z_M or of an interval");
  verify->add_option("--modulus", verify_args.modulus, "modulus M for a cyclic tiling");
  verify->add_option("--tile", verify_args.tile, "tile as a comma-separated list");
  verify->add_option("--complement", verify_args.complement, "complement subset of Z_M");
  verify->add_option("--interval", verify_args.interval, "interval length n");
  verify->add_option("--a", verify_args.a, "interval tiling side A");
  verify->add_option("--b", verify_args.b, "interval tiling side B");
  verify->add_flag("--render", verify_args.render, "print an ASCII strip of the covering");

  std::int64_t period_modulus = 0;
  std::string period_set;
  CLI::App* period = app.add_subcommand("period", "least period of a subset of Z_M");
  period->add_option("--modulus", period_modulus, "modulus M")->required();
  period->add_option("--set", period_set, "subset of Z_M")->required();

  std::int64_t construct_diameter = 0;
  bool force_quadratic = false;
  bool construct_render = false;
  CLI::App* construct = app.add_subcommand(
      "construct", "build a verified tiling with a long least period");
  construct->add_option("--diameter", construct_diameter, "diameter budget D")->required();
  construct->add_flag("--force-quadratic", force_quadratic,
                      "fail below the quadratic threshold instead of falling back");
  construct->add_flag("--render", construct_render, "print an ASCII strip of the covering");

  std::string certify_tile;
  std::int64_t certify_modulus = -1;
  CLI::App* certify = app.add_subcommand(
      "certify", "cyclotomic period certificate of a tile");
  certify->add_option("--tile", certify_tile, "tile as a comma-separated list")->required();
  certify->add_option("--modulus", certify_modulus, "also report the forced period mod M");

  std::int64_t decompose_n = 0;
  std::string decompose_a, decompose_b;
  bool decompose_tree = false;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "scaled decomposition of an interval tiling");
  decompose->add_option("--n", decompose_n, "interval length")->required();
  decompose->add_option("--a", decompose_a, "side A")->required();
  decompose->add_option("--b", decompose_b, "side B")->required();
  decompose->add_flag("--tree", decompose_tree, "emit the full decomposition chain");

  std::int64_t search_max_d = 0;
  bool search_unpruned = false;
  std::int64_t search_cap = -1;
  int search_jobs = 1;
  CLI::App* search = app.add_subcommand(
      "search", "extremal least periods per diameter, with witnesses");
  search->add_option("--max-diameter", search_max_d, "table rows 1..D")->required();
  search->add_flag("--unpruned", search_unpruned,
                   "brute-force every modulus instead of certificate candidates");
  search->add_option("--cap", search_cap, "modulus cap (default 2^D per row)");
  search->add_option("--jobs", search_jobs, "worker threads over tile sets");

  std::int64_t cyclotomic_n = 0;
  CLI::App* cyclo = app.add_subcommand("cyclotomic", "coefficients of Phi_n");
  cyclo->add_option("--n", cyclotomic_n, "index n")->required();

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.human = app.help();
    result.json_mode = json_mode;
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = CliStatus::error;
    result.message = std::string("usage error: ") + e.what();
    result.json_mode = json_mode;
    return result;
  }

  try {
    if (verify->parsed()) {
      bool cyclic = verify->count("--modulus") > 0;
      bool interval = verify->count("--interval") > 0;
      if (cyclic == interval)
        throw std::invalid_argument(
            "verify: give either --modulus/--tile/--complement or --interval/--a/--b");
      if (cyclic) {
        if (verify->count("--tile") == 0 || verify->count("--complement") == 0)
          throw std::invalid_argument("verify: --tile and --complement are required");
        result = cmd_verify_cyclic(verify_args);
      } else {
        if (verify->count("--a") == 0 || verify->count("--b") == 0)
          throw std::invalid_argument("verify: --a and --b are required");
        result = cmd_verify_interval(verify_args);
      }
    } else if (period->parsed()) {
      result = cmd_period(period_modulus, period_set);
    } else if (construct->parsed()) {
      result = cmd_construct(construct_diameter, force_quadratic, construct_render);
    } else if (certify->parsed()) {
      result = cmd_certify(certify_tile,
                           certify->count("--modulus") > 0
                               ? std::optional<std::int64_t>(certify_modulus)
                               : std::nullopt);
    } else if (decompose->parsed()) {
      result = cmd_decompose(decompose_n, decompose_a, decompose_b, decompose_tree);
    } else if (search->parsed()) {
      result = cmd_search(search_max_d, search_unpruned,
                          search->count("--cap") > 0
                              ? std::optional<std::int64_t>(search_cap)
                              : std::nullopt,
                          search_jobs);
    } else if (cyclo->parsed()) {
      result = cmd_cyclotomic(cyclotomic_n);
    }
  } catch (const std::invalid_argument& e) {
    result = CommandResult{};
    result.status = CliStatus::error;
    result.message = e.what();
  } catch (const std::exception& e) {
    result = CommandResult{};
    result.status = CliStatus::error;
    result.message = std::string("internal error: ") + e.what();
  }
  result.json_mode = json_mode;
  return result;
}

int run_cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CommandResult result = run_cli(args);
  if (result.status != CliStatus::error && !result.payload.is_null()) {
    if (result.json_mode) {
      if (result.jsonl && result.payload.is_array()) {
        for (const auto& row : result.payload) std::cout << row.dump() << "\n";
      } else {
        std::cout << result.payload.dump() << "\n";
      }
    } else {
      std::cout << result.human << "\n";
    }
  } else if (!result.json_mode && !result.human.empty()) {
    std::cout << result.human << "\n";
  }
  if (!result.message.empty()) std::cerr << result.message << "\n";
  return static_cast<int>(result.status);
}

}  // namespace ztile
