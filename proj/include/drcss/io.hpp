#pragma once

// File formats: drcss-phase-v1 (sequence sets, exact phases), fhss-v1,
// ads-v1, AF grid CSV, and JSON reports.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "drcss/ambiguity.hpp"
#include "drcss/bounds.hpp"
#include "drcss/errors.hpp"
#include "drcss/format.hpp"
#include "drcss/ingredients.hpp"
#include "drcss/phase.hpp"

namespace drcss {

using nlohmann::json;

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline std::int64_t get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("field '") + key + "' must be an integer");
  }
  return j.at(key).get<std::int64_t>();
}

inline void expect_format(const json& j, const char* format) {
  if (!j.is_object() || !j.contains("format") || j.at("format") != format) {
    throw ParseError(std::string("expected format '") + format + "'");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// drcss-phase-v1

inline json to_json(const DRCSSet& set) {
  json sets = json::array();
  for (const auto& member : set.members()) {
    json rows = json::array();
    for (const auto& r : member.rows()) {
      json row = json::array();
      for (const auto& p : r) row.push_back({p.num(), p.den()});
      rows.push_back(std::move(row));
    }
    sets.push_back(std::move(rows));
  }
  return {{"format", "drcss-phase-v1"},
          {"K", set.set_size()},
          {"M", set.flock_size()},
          {"N", set.length()},
          {"provenance", set.provenance()},
          {"sets", std::move(sets)}};
}

inline DRCSSet set_from_json(const json& j) {
  detail::expect_format(j, "drcss-phase-v1");
  const auto k = detail::get_int(j, "K");
  const auto m = detail::get_int(j, "M");
  const auto n = detail::get_int(j, "N");
  if (k < 1 || m < 1 || n < 1) throw ParseError("K, M, N must be >= 1");
  if (!j.contains("sets") || !j.at("sets").is_array() ||
      static_cast<std::int64_t>(j.at("sets").size()) != k) {
    throw ParseError("'sets' must hold K members");
  }
  std::vector<DRCS> members;
  for (const auto& js : j.at("sets")) {
    if (!js.is_array() || static_cast<std::int64_t>(js.size()) != m) {
      throw ParseError("each member must hold M rows");
    }
    std::vector<UnitSequence> rows;
    for (const auto& jr : js) {
      if (!jr.is_array() || static_cast<std::int64_t>(jr.size()) != n) {
        throw ParseError("each row must hold N entries");
      }
      std::vector<PhaseFraction> entries;
      entries.reserve(static_cast<std::size_t>(n));
      for (const auto& je : jr) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
            !je[1].is_number_integer()) {
          throw ParseError("phase entries must be [num, den] integer pairs");
        }
        const auto den = je[1].get<std::int64_t>();
        if (den < 1) throw ParseError("phase denominator must be >= 1");
        entries.emplace_back(je[0].get<std::int64_t>(), den);
      }
      rows.emplace_back(std::move(entries));
    }
    members.emplace_back(std::move(rows));
  }
  json prov = j.value("provenance", json::object());
  return DRCSSet(std::move(members), std::move(prov));
}

inline DRCSSet load_set(const std::string& path) {
  return set_from_json(parse_json(read_text_file(path)));
}

inline void save_set(const std::string& path, const DRCSSet& set) {
  write_text_file(path, to_json(set).dump(1) + "\n");
}

// ---------------------------------------------------------------------------
// fhss-v1

inline json to_json(const FHSS& f) {
  return {{"format", "fhss-v1"},
          {"K", f.set_size()},
          {"N", f.length()},
          {"Q", f.alphabet},
          {"rows", f.rows}};
}

// Parses and certifies; a non-OC set loads with its failing certificate.
inline FHSS fhss_from_json(const json& j) {
  detail::expect_format(j, "fhss-v1");
  const auto k = detail::get_int(j, "K");
  const auto n = detail::get_int(j, "N");
  const auto q = detail::get_int(j, "Q");
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw ParseError("'rows' must be an array");
  }
  FHSS f{q, {}, std::nullopt, "file"};
  for (const auto& jr : j.at("rows")) {
    if (!jr.is_array()) throw ParseError("each row must be an array");
    HopRow row;
    for (const auto& s : jr) {
      if (!s.is_number_integer()) throw ParseError("hop symbols must be integers");
      row.push_back(s.get<std::int64_t>());
    }
    f.rows.push_back(std::move(row));
  }
  if (static_cast<std::int64_t>(f.rows.size()) != k || k < 1) {
    throw ParseError("row count differs from K");
  }
  for (const auto& r : f.rows) {
    if (static_cast<std::int64_t>(r.size()) != n) throw ParseError("row length differs from N");
    for (auto s : r) {
      if (s < 0 || s >= q) {
        throw ParseError("symbol " + std::to_string(s) + " outside Z_" + std::to_string(q));
      }
    }
  }
  return certify(std::move(f));
}

inline FHSS load_fhss(const std::string& path) {
  return fhss_from_json(parse_json(read_text_file(path)));
}

// ---------------------------------------------------------------------------
// ads-v1

inline json to_json(const ADS& a) {
  return {{"format", "ads-v1"},
          {"N", a.modulus},
          {"D", a.elements},
          {"lambda", a.lambda},
          {"t", a.ads_t}};
}

inline ADS ads_from_json(const json& j) {
  detail::expect_format(j, "ads-v1");
  ADS a;
  a.modulus = detail::get_int(j, "N");
  a.lambda = detail::get_int(j, "lambda");
  a.ads_t = detail::get_int(j, "t");
  if (!j.contains("D") || !j.at("D").is_array()) throw ParseError("'D' must be an array");
  for (const auto& d : j.at("D")) {
    if (!d.is_number_integer()) throw ParseError("ADS elements must be integers");
    a.elements.push_back(d.get<std::int64_t>());
  }
  return a;
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const LazWindow& w) { return {{"Zx", w.zx}, {"Zy", w.zy}}; }

inline json to_json(const AfWitness& w) {
  return {{"u", w.u}, {"v", w.v}, {"tau", w.tau}, {"f", w.f},
          {"magnitude", round9(w.magnitude)}};
}

inline json to_json(const AmbiguityReport& r) {
  json j = {{"window", to_json(r.window)},
            {"length", r.length},
            {"theta_a", round9(r.theta_a)},
            {"theta_c", round9(r.theta_c)},
            {"theta_max", round9(r.theta_max)},
            {"auto_witness", to_json(r.auto_witness)}};
  j["cross_witness"] = r.cross_witness ? to_json(*r.cross_witness) : json(nullptr);
  return j;
}

inline json to_json(const OptimalityReport& r) {
  return {{"K", r.params.K},     {"M", r.params.M},
          {"N", r.params.N},     {"Zx", r.params.Zx},
          {"Zy", r.params.Zy},   {"theta_max", round9(r.theta_max)},
          {"bound", round9(r.bound)},
          {"rho", std::isfinite(r.rho) ? json(round9(r.rho)) : json("inf")},
          {"class", std::string(to_string(r.cls))}};
}

inline json to_json(const HammingReport& h) {
  json j = {{"H_a", h.h_auto}, {"H_c", h.h_cross}, {"one_coincidence", h.one_coincidence()}};
  const auto wit = [](const std::optional<HammingWitness>& w) {
    if (!w) return json(nullptr);
    return json{{"x", w->x}, {"y", w->y}, {"tau", w->tau}, {"hits", w->hits}};
  };
  j["auto_witness"] = wit(h.auto_witness);
  j["cross_witness"] = wit(h.cross_witness);
  return j;
}

// One row per cell in (tau, f) order over canonical residues.
inline std::string grid_csv(const AmbiguityGrid& g) {
  std::string out = "tau,f,re,im,mag\n";
  const std::size_t n = g.length();
  out.reserve(out.size() + n * n * 48);
  for (std::size_t tau = 0; tau < n; ++tau) {
    for (std::size_t f = 0; f < n; ++f) {
      const Complex z = g.cell(tau, f);
      out += std::to_string(tau);
      out += ',';
      out += std::to_string(f);
      out += ',';
      out += fmt9(z.real());
      out += ',';
      out += fmt9(z.imag());
      out += ',';
      out += fmt9(std::abs(z));
      out += '\n';
    }
  }
  return out;
}

}  // namespace drcss
