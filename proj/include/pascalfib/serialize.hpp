#pragma once

/**
 * @file serialize.hpp
 * @brief JSON, CSV and plain-text renderings of matrices, polynomials and reports.
 *
 * Big integers are always written as decimal strings, in JSON and CSV alike.
 * Object keys are emitted in sorted order so output is byte-deterministic.
 */

#include "pascalfib/campaign.hpp"
#include "pascalfib/core.hpp"
#include "pascalfib/modorder.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pascalfib {

using json = nlohmann::json;

inline json entries_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 1; i <= m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= m.n(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json entries_json(const ModMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 1; i <= m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= m.n(); ++j) row.push_back(std::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const ExactMatrix& m) { return {{"n", m.n()}, {"entries", entries_json(m)}}; }

inline json to_json(const ModMatrix& m) {
  return {{"n", m.n()}, {"modulus", m.modulus()}, {"entries", entries_json(m)}};
}

/// Reads the "entries" array (decimal strings) back into an ExactMatrix.
inline ExactMatrix exact_matrix_from_json(const json& j) {
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix json: 'entries' must be a non-empty array");
  std::vector<std::vector<BigInt>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("matrix json: each row must be an array");
    std::vector<BigInt> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw std::invalid_argument("matrix json: entries must be decimal strings");
      try {
        r.emplace_back(cell.get<std::string>());
      } catch (const std::runtime_error&) {
        throw std::invalid_argument("matrix json: bad integer '" + cell.get<std::string>() + "'");
      }
    }
    out.push_back(std::move(r));
  }
  ExactMatrix m = ExactMatrix::from_rows(out);
  if (j.contains("n") && j.at("n").get<std::size_t>() != m.n())
    throw std::invalid_argument("matrix json: 'n' disagrees with entries");
  return m;
}

inline json to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"coefficients", coeffs}, {"display", p.str()}};
}

inline json to_json(const OrderReport& r) {
  json checks = json::object();
  for (const auto& [id, check] : r.theorem_checks) {
    checks[id] = {{"verdict", std::string(to_string(check.verdict))}, {"values", check.values}};
  }
  return {{"kind", std::string(to_string(r.kind))},
          {"n", r.n},
          {"p", r.p},
          {"order", r.order},
          {"witness_exponent_bound", r.witness_exponent_bound},
          {"theorem_checks", checks}};
}

inline json params_json(const CheckParams& p) {
  json out = json::object();
  if (p.n) out["n"] = *p.n;
  if (p.e) out["e"] = *p.e;
  if (p.p) out["p"] = *p.p;
  return out;
}

inline json to_json(const CampaignReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item = {{"law", c.law}, {"params", params_json(c.params)}, {"verdict", std::string(to_string(c.verdict))}};
    if (c.witness) item["witness"] = *c.witness;
    checks.push_back(std::move(item));
  }
  return {{"campaign", r.campaign},
          {"checks", checks},
          {"summary", {{"pass", r.count(Verdict::pass)}, {"fail", r.count(Verdict::fail)}}}};
}

// ---------------------------------------------------------------------------
// Plain / CSV
// ---------------------------------------------------------------------------

/// "[[3,5],[5,8]]"
template <class Matrix>
std::string to_plain(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 1; i <= m.n(); ++i) {
    os << (i > 1 ? ",[" : "[");
    for (std::size_t j = 1; j <= m.n(); ++j) os << (j > 1 ? "," : "") << m(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

template <class Matrix>
std::string to_csv(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= m.n(); ++i) {
    for (std::size_t j = 1; j <= m.n(); ++j) os << (j > 1 ? "," : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace detail {

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace detail

inline std::string to_csv(const CampaignReport& r) {
  std::ostringstream os;
  os << "law,n,e,p,verdict,witness\n";
  for (const auto& c : r.checks) {
    os << c.law << "," << detail::opt_str(c.params.n) << "," << detail::opt_str(c.params.e) << ","
       << detail::opt_str(c.params.p) << "," << to_string(c.verdict) << "," << csv_escape(c.witness.value_or(""))
       << "\n";
  }
  return os.str();
}

inline std::string to_plain(const CampaignReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << c.law;
    if (c.params.n) os << " n=" << *c.params.n;
    if (c.params.e) os << " e=" << *c.params.e;
    if (c.params.p) os << " p=" << *c.params.p;
    os << ": " << to_string(c.verdict);
    if (c.witness) os << " (" << *c.witness << ")";
    os << "\n";
  }
  os << "summary: pass=" << r.count(Verdict::pass) << " fail=" << r.count(Verdict::fail)
     << " hypothesis-not-met=" << r.count(Verdict::hypothesis_not_met) << (r.complete ? "" : " (stopped early)")
     << "\n";
  return os.str();
}

inline std::string to_plain(const OrderReport& r) {
  std::ostringstream os;
  os << "kind: " << to_string(r.kind) << "\nn: " << r.n << "\np: " << r.p << "\norder: " << r.order
     << "\nwitness_exponent_bound: " << r.witness_exponent_bound << "\n";
  for (const auto& [id, check] : r.theorem_checks) {
    os << id << ": " << to_string(check.verdict);
    for (const auto& [k, v] : check.values) os << " " << k << "=" << v;
    os << "\n";
  }
  return os.str();
}

inline OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "plain") return OutputFormat::plain;
  throw ConfigError("unknown output format '" + std::string(s) + "'");
}

namespace detail {

inline IntRange range_from_json(const json& j, std::string_view what) {
  if (j.is_string()) return parse_range(j.get<std::string>(), what);
  if (j.is_number_integer()) return {j.get<std::int64_t>(), j.get<std::int64_t>()};
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  throw ConfigError("invalid " + std::string(what) + " in config");
}

}  // namespace detail

/// Campaign config from a JSON object such as
///   {"laws": ["fib-recurrence"], "n": "2..10", "e": [1, 12], "primes": [2, 3],
///    "format": "json", "fail_fast": false, "threads": 4}
/// Missing keys keep their defaults. Validation happens in validate_config.
inline CampaignConfig campaign_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  CampaignConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "laws") {
        c.laws = value.is_string() ? split_list(value.get<std::string>()) : value.get<std::vector<std::string>>();
      } else if (key == "n") {
        c.n_range = detail::range_from_json(value, "n range");
      } else if (key == "e") {
        c.e_range = detail::range_from_json(value, "e range");
      } else if (key == "primes") {
        c.primes = value.get<std::vector<std::uint64_t>>();
      } else if (key == "format") {
        c.output_format = parse_format(value.get<std::string>());
      } else if (key == "fail_fast") {
        c.fail_fast = value.get<bool>();
      } else if (key == "threads") {
        c.threads = value.get<unsigned>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed config: ") + ex.what());
  }
  return c;
}

}  // namespace pascalfib
