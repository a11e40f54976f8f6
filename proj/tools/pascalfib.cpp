// pascalfib: command-line front end for the Pascal-matrix library.
//
//   pascalfib matrix <left|right> <n> <show|pow E|inverse|charpoly|det> [--mod P] [--format F]
//   pascalfib fib <entry-point|period|value|lucas|bloom-wall> <arg> [--format F]
//   pascalfib order <left|right> <n> <p> [--format F]
//   pascalfib verify --laws a,b [--n A..B] [--e A..B] [--primes 2,3] [--config FILE]
//                    [--format F] [--fail-fast] [--threads T]
//
// Exit codes: 0 all checks pass, 1 at least one verification failure, 2 usage error.

#include "pascalfib/campaign.hpp"
#include "pascalfib/core.hpp"
#include "pascalfib/fib.hpp"
#include "pascalfib/modorder.hpp"
#include "pascalfib/pascal.hpp"
#include "pascalfib/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace pascalfib;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ExactMatrix build(const std::string& kind, std::size_t n) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxDimension)) throw UsageError("n must lie within 1..64");
  return kind == "left" ? build_left(n) : build_right(n);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_matrix(const std::string& kind, std::size_t n, const std::string& action, const std::vector<std::string>& extra,
               std::optional<std::uint64_t> modulus, OutputFormat format) {
  if (modulus && !is_prime(*modulus)) throw UsageError("modulus " + std::to_string(*modulus) + " is not prime");
  const ExactMatrix base = build(kind, n);
  json meta = {{"kind", kind}, {"n", n}, {"action", action}};
  if (modulus) meta["modulus"] = *modulus;

  if (action == "show" || action == "pow" || action == "inverse") {
    ExactMatrix result = base;
    if (action == "pow") {
      if (extra.size() != 1) throw UsageError("pow needs exactly one exponent");
      const std::int64_t e = detail::parse_int(extra[0], "exponent");
      if (e < -kMaxExponent || e > kMaxExponent) throw UsageError("exponent must lie within -64..64");
      result = mat_pow(base, e);
      meta["exponent"] = e;
    } else if (!extra.empty()) {
      throw UsageError("unexpected argument '" + extra[0] + "'");
    }
    if (action == "inverse") result = unimodular_inverse(base);

    if (modulus) {
      const ModMatrix m = mat_mod(result, *modulus);
      if (format == OutputFormat::json) {
        meta["entries"] = entries_json(m);
        emit(meta);
      } else {
        std::cout << (format == OutputFormat::csv ? to_csv(m) : to_plain(m) + "\n");
      }
    } else if (format == OutputFormat::json) {
      meta["entries"] = entries_json(result);
      emit(meta);
    } else {
      std::cout << (format == OutputFormat::csv ? to_csv(result) : to_plain(result) + "\n");
    }
    return kExitPass;
  }
  if (!extra.empty()) throw UsageError("unexpected argument '" + extra[0] + "'");

  if (action == "det") {
    const BigInt d = det(base);
    const std::string text = modulus ? std::to_string(mod_reduce(d, *modulus)) : d.str();
    if (format == OutputFormat::json) {
      meta["det"] = text;
      emit(meta);
    } else {
      std::cout << text << "\n";
    }
    return kExitPass;
  }
  if (action == "charpoly") {
    IntPolynomial poly = charpoly(base);
    if (modulus) {
      std::vector<BigInt> reduced;
      for (const auto& c : poly.coeffs()) reduced.emplace_back(mod_reduce(c, *modulus));
      poly = IntPolynomial(std::move(reduced));
    }
    if (format == OutputFormat::json) {
      meta.update(to_json(poly));
      emit(meta);
    } else if (format == OutputFormat::csv) {
      for (std::size_t k = 0; k < poly.coeffs().size(); ++k) std::cout << (k ? "," : "") << poly.coeffs()[k];
      std::cout << "\n";
    } else {
      std::cout << poly.str() << "\n";
    }
    return kExitPass;
  }
  throw UsageError("unknown matrix action '" + action + "'");
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  const std::int64_t v = detail::parse_int(s, what);
  if (v < 0) throw UsageError(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

int run_fib(const std::string& query, const std::string& arg, OutputFormat format) {
  const std::uint64_t value = parse_u64(arg, "argument");
  json out = {{"query", query}, {"argument", value}};
  std::string plain;

  if (query == "entry-point" || query == "period") {
    if (value < 2) throw UsageError("modulus must be at least 2");
    const std::uint64_t r = query == "entry-point" ? entry_point(value) : pisano_period(value);
    out["value"] = std::to_string(r);
    plain = std::to_string(r);
  } else if (query == "value" || query == "lucas") {
    const BigInt r = query == "value" ? fib(value) : lucas(value);
    out["value"] = r.str();
    plain = r.str();
  } else if (query == "bloom-wall") {
    const BloomWallReport r = bloom_wall_check(value);
    const bool pm1 = r.residue_class == Mod5Class::plus_minus_one;
    out["residue_class"] = pm1 ? "+-1 mod 5" : "+-2 mod 5";
    out["entry_point"] = r.entry_point;
    out["pisano_period"] = r.pisano_period;
    out["verdict"] = std::string(to_string(verdict_of(r.passed())));
    plain = "p=" + std::to_string(r.p) + " class=" + (pm1 ? "+-1" : "+-2") + " entry_point=" +
            std::to_string(r.entry_point) + " period=" + std::to_string(r.pisano_period) + " " +
            (pm1 ? "period|p-1" : "entry_point|p+1 period|2(p+1)") + ": " +
            std::string(to_string(verdict_of(r.passed())));
    if (format == OutputFormat::json) emit(out);
    else std::cout << plain << "\n";
    return r.passed() ? kExitPass : kExitFail;
  } else {
    throw UsageError("unknown fib query '" + query + "'");
  }

  if (format == OutputFormat::json) emit(out);
  else std::cout << plain << "\n";
  return kExitPass;
}

int run_order(const std::string& kind, std::size_t n, std::uint64_t p, OutputFormat format) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (n > static_cast<std::size_t>(kMaxDimension)) throw UsageError("n must lie within 1..64");
  if (p > kMaxPrime) throw UsageError("p must be below 2^31");
  const OrderReport r = order_report(kind == "left" ? MatrixKind::left : MatrixKind::right, n, p);
  if (format == OutputFormat::json) emit(to_json(r));
  else std::cout << to_plain(r);
  return r.passed() ? kExitPass : kExitFail;
}

int run_verify(CampaignConfig config, OutputFormat format) {
  config.output_format = format;
  const CampaignReport report = run_campaign(config);
  switch (format) {
    case OutputFormat::json: emit(to_json(report)); break;
    case OutputFormat::csv: std::cout << to_csv(report); break;
    case OutputFormat::plain: std::cout << to_plain(report); break;
  }
  std::cout.flush();
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pascal-matrix powers, Fibonacci moduli and theorem verification"};
  app.require_subcommand(1);

  std::string format_text = "plain";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  };

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Build, power, invert or analyse L_n / R_n");
  std::string m_kind, m_action;
  std::size_t m_n = 0;
  std::vector<std::string> m_extra;
  std::optional<std::uint64_t> m_mod;
  matrix->add_option("kind", m_kind)->required()->check(CLI::IsMember({"left", "right"}));
  matrix->add_option("n", m_n)->required();
  matrix->add_option("action", m_action)->required()->check(
      CLI::IsMember({"show", "pow", "inverse", "charpoly", "det"}));
  matrix->add_option("args", m_extra, "Exponent for pow")->allow_extra_args();
  matrix->add_option("--mod", m_mod, "Reduce the result modulo a prime");
  add_format(matrix);

  // fib
  auto* fibcmd = app.add_subcommand("fib", "Fibonacci values and modular data");
  std::string f_query, f_arg;
  fibcmd->add_option("query", f_query)->required()->check(
      CLI::IsMember({"entry-point", "period", "value", "lucas", "bloom-wall"}));
  fibcmd->add_option("arg", f_arg)->required();
  add_format(fibcmd);

  // order
  auto* order = app.add_subcommand("order", "Order of L_n or R_n modulo a prime");
  std::string o_kind;
  std::size_t o_n = 0;
  std::uint64_t o_p = 0;
  order->add_option("kind", o_kind)->required()->check(CLI::IsMember({"left", "right"}));
  order->add_option("n", o_n)->required();
  order->add_option("p", o_p)->required();
  add_format(order);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification campaigns");
  std::string v_laws, v_n, v_e, v_primes, v_config;
  bool v_fail_fast = false;
  unsigned v_threads = 1;
  auto* laws_opt = verify->add_option("--laws", v_laws, "Comma-separated law ids");
  auto* n_opt = verify->add_option("--n", v_n, "Dimension range A..B");
  auto* e_opt = verify->add_option("--e", v_e, "Exponent range A..B");
  auto* p_opt = verify->add_option("--primes", v_primes, "Comma-separated primes");
  verify->add_option("--config", v_config, "JSON campaign config file");
  auto* ff_opt = verify->add_flag("--fail-fast", v_fail_fast, "Stop at the first failure");
  auto* th_opt = verify->add_option("--threads", v_threads, "Worker threads");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_text);
    if (*matrix) return run_matrix(m_kind, m_n, m_action, m_extra, m_mod, format);
    if (*fibcmd) return run_fib(f_query, f_arg, format);
    if (*order) return run_order(o_kind, o_n, o_p, format);
    if (*verify) {
      CampaignConfig config;
      OutputFormat fmt = format;
      if (!v_config.empty()) {
        std::ifstream in(v_config);
        if (!in) throw UsageError("cannot open config file '" + v_config + "'");
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& ex) {
          throw UsageError(std::string("config is not valid JSON: ") + ex.what());
        }
        config = campaign_config_from_json(j);
        if (verify->get_option("--format")->count() == 0) fmt = config.output_format;
      }
      if (laws_opt->count()) config.laws = split_list(v_laws);
      if (n_opt->count()) config.n_range = parse_range(v_n, "n range");
      if (e_opt->count()) config.e_range = parse_range(v_e, "e range");
      if (p_opt->count()) {
        config.primes.clear();
        for (const auto& p : split_list(v_primes)) config.primes.push_back(parse_u64(p, "prime"));
      }
      if (ff_opt->count()) config.fail_fast = v_fail_fast;
      if (th_opt->count()) config.threads = v_threads;
      return run_verify(config, fmt);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
