// drcss: construct, verify and measure Doppler-resilient complementary
// sequence sets from the command line.
//
// Exit codes: 0 all certifications pass, 1 certification failure,
// 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "drcss/drcss.hpp"

namespace {

using drcss::json;

constexpr int kOk = 0;
constexpr int kCertFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

bool within_budget(const drcss::DRCSSet& set, bool full) {
  const double cost = drcss::sweep_cost(static_cast<std::int64_t>(set.set_size()),
                                        static_cast<std::int64_t>(set.flock_size()),
                                        static_cast<std::int64_t>(set.length()));
  if (cost <= drcss::kSweepBudget || full) return true;
  std::cerr << "sweep needs ~" << drcss::fmt9(cost) << " terms (budget "
            << drcss::fmt9(drcss::kSweepBudget) << "); rerun with --full\n";
  return false;
}

json certificate_json(const drcss::ClaimVerdict& v) {
  json j = {{"confirmed", v.confirmed},
            {"theta_a", drcss::round9(v.measured.theta_a)},
            {"theta_c", drcss::round9(v.measured.theta_c)},
            {"theta_max", drcss::round9(v.measured.theta_max)},
            {"failures", v.failures},
            {"remarks", v.remarks}};
  if (v.optimality) j["optimality"] = drcss::to_json(*v.optimality);
  return j;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string method;
  std::optional<std::int64_t> p, m, K, N, t, L, M;
  std::string fhss_file, ccc_file, source = "reed", out;
  bool full = false;
};

drcss::Construction build(const ConstructArgs& a, const drcss::Exec& exec) {
  const auto need = [](const std::optional<std::int64_t>& v, const char* name) {
    if (!v) throw UsageError(std::string("--") + name + " is required for this method");
    return *v;
  };
  if (a.method == "theorem1") {
    drcss::FHSS f;
    if (!a.fhss_file.empty()) {
      f = drcss::load_fhss(a.fhss_file);
    } else if (a.source == "reed") {
      f = drcss::fhss_reed(drcss::FiniteField(need(a.p, "p"), a.m.value_or(1)));
    } else if (a.source == "titlebaum") {
      f = drcss::fhss_titlebaum(need(a.p, "p"));
    } else if (a.source == "cfr") {
      f = drcss::cfr_as_fhss(drcss::build_cfr(need(a.N, "N")));
    } else {
      throw UsageError("unknown --source '" + a.source + "'");
    }
    return drcss::drcss_from_ocfhss(f);
  }
  if (a.method == "theorem2") return drcss::drcss_from_cfr(need(a.N, "N"), a.t.value_or(0));
  if (a.method == "theorem3") return drcss::drcss_theorem3(need(a.p, "p"), need(a.K, "K"), exec);
  if (a.method == "corollary2") {
    return drcss::drcs_corollary2(drcss::FiniteField(need(a.p, "p"), a.m.value_or(1)), exec);
  }
  if (a.method == "theorem4") {
    drcss::CCC ccc;
    if (!a.ccc_file.empty()) {
      const auto set = drcss::load_set(a.ccc_file);
      ccc = drcss::certified_ccc(set.members());
    } else if (a.M) {
      ccc = drcss::build_dft_ccc(*a.M);
    } else {
      ccc = drcss::fixture_example3();
    }
    return drcss::zaz_drcss_from_ccc(ccc, a.L.value_or(1));
  }
  throw UsageError("unknown --method '" + a.method + "'");
}

int run_construct(const ConstructArgs& a, const drcss::Exec& exec) {
  auto c = build(a, exec);
  if (!within_budget(c.set, a.full)) return kUsage;
  const auto v = drcss::certify_claim(c.set, c.claim, exec);
  c.set.provenance()["certificate"] = certificate_json(v);
  drcss::save_set(a.out, c.set);
  print({{"out", a.out},
         {"claim", drcss::to_json(c.claim)},
         {"certificate", certificate_json(v)}});
  return v.confirmed ? kOk : kCertFailure;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string kind, in;
  std::optional<std::size_t> zx, zy;
  bool full = false;
};

int run_verify(const VerifyArgs& a, const drcss::Exec& exec) {
  if (a.kind == "ocfhss" || a.kind == "cfr") {
    const auto f = drcss::load_fhss(a.in);
    if (a.kind == "ocfhss") {
      print({{"kind", "ocfhss"}, {"hamming", drcss::to_json(*f.certificate)}});
      return f.one_coincidence() ? kOk : kCertFailure;
    }
    const auto chk = drcss::check_cfr(f.rows);
    json j = {{"kind", "cfr"}, {"pass", chk.ok}};
    if (chk.witness) {
      const auto& w = *chk.witness;
      j["witness"] = {
          {"type", w.kind == drcss::CfrWitness::Kind::NotPermutation ? "not-permutation"
                                                                     : "coincidence"},
          {"row", w.row}, {"row2", w.row2}, {"a", w.a}, {"b", w.b},
          {"step", w.step}, {"pos_a", w.pos_a}, {"pos_b", w.pos_b}};
    }
    print(j);
    return chk.ok ? kOk : kCertFailure;
  }
  if (a.kind == "ads") {
    const auto ads = drcss::ads_from_json(drcss::parse_json(drcss::read_text_file(a.in)));
    const auto chk = drcss::ads_verify(ads);
    json hist = json::object();
    for (const auto& [count, n] : chk.histogram) hist[std::to_string(count)] = n;
    json j = {{"kind", "ads"},
              {"pass", chk.ok},
              {"claimed", {{"lambda", ads.lambda}, {"t", ads.ads_t}}},
              {"histogram", hist}};
    if (chk.witness) {
      j["witness"] = {chk.witness->first, chk.witness->second};
    } else {
      j["measured"] = {{"lambda", chk.lambda}, {"t", chk.ads_t},
                       {"difference_set", chk.difference_set}};
    }
    print(j);
    return chk.ok ? kOk : kCertFailure;
  }

  const auto set = drcss::load_set(a.in);
  if (a.kind == "ccc") {
    const auto chk = drcss::check_ccc(set.members());
    json j = {{"kind", "ccc"}, {"pass", chk.ok}, {"reason", chk.reason}};
    if (chk.witness) {
      const auto& w = *chk.witness;
      j["witness"] = {{"k", w.k}, {"t", w.t}, {"tau", w.tau},
                      {"re", drcss::round9(w.value.real())},
                      {"im", drcss::round9(w.value.imag())},
                      {"expected", w.expected}};
    }
    print(j);
    return chk.ok ? kOk : kCertFailure;
  }
  if (!within_budget(set, a.full)) return kUsage;

  std::optional<drcss::LazWindow> window;
  if (a.zx || a.zy) {
    window = drcss::LazWindow{a.zx.value_or(set.length()), a.zy.value_or(set.length())};
  }
  if (a.kind == "drss") {
    const auto d = drcss::load_drss(set, window, exec);
    print({{"kind", "drss"},
           {"alpha_max", drcss::round9(d.alpha_max)},
           {"report", drcss::to_json(d.report)},
           {"notes", d.notes}});
    return d.notes.empty() ? kOk : kCertFailure;
  }
  if (a.kind != "drcss") throw UsageError("unknown --kind '" + a.kind + "'");

  const auto& prov = set.provenance();
  if (prov.contains("claim")) {
    const auto claim = drcss::claim_from_json(prov.at("claim"));
    const auto v = drcss::certify_claim(set, claim, exec);
    const json cert = certificate_json(v);
    bool reproduced = true;
    if (prov.contains("certificate")) {
      for (const char* key : {"theta_a", "theta_c", "theta_max", "confirmed"}) {
        if (prov.at("certificate").value(key, json()) != cert.at(key)) reproduced = false;
      }
    }
    json j = {{"kind", "drcss"},
              {"claim", drcss::to_json(claim)},
              {"certificate", cert},
              {"matches_embedded_certificate", reproduced}};
    if (window) j["window_report"] = drcss::to_json(drcss::max_magnitudes(set, *window, exec));
    print(j);
    return v.confirmed && reproduced ? kOk : kCertFailure;
  }
  const auto w = window.value_or(drcss::LazWindow::full(set.length()));
  const auto rep = drcss::max_magnitudes(set, w, exec);
  json j = {{"kind", "drcss"}, {"report", drcss::to_json(rep)}};
  const drcss::SetParams params{static_cast<std::int64_t>(set.set_size()),
                                static_cast<std::int64_t>(set.flock_size()),
                                static_cast<std::int64_t>(set.length()),
                                static_cast<std::int64_t>(w.zx),
                                static_cast<std::int64_t>(w.zy)};
  try {
    const auto o = drcss::optimality_factor(rep.theta_max, params);
    j["optimality"] = drcss::to_json(o);
    print(j);
    return o.cls == drcss::Optimality::ViolatesBound ? kCertFailure : kOk;
  } catch (const drcss::InfeasibleWindow& e) {
    j["optimality"] = {{"error", e.what()}};
    print(j);
    return kOk;
  }
}

// --- bound ------------------------------------------------------------------

int run_bound(const drcss::SetParams& p, std::optional<double> theta) {
  try {
    if (theta) {
      const auto o = drcss::optimality_factor(*theta, p);
      print(drcss::to_json(o));
      return o.cls == drcss::Optimality::ViolatesBound ? kCertFailure : kOk;
    }
    print({{"K", p.K}, {"M", p.M}, {"N", p.N}, {"Zx", p.Zx}, {"Zy", p.Zy},
           {"bound", drcss::round9(drcss::laz_bound(p))},
           {"zaz", std::string(drcss::to_string(drcss::zaz_check(p.K, p.M, p.N, p.Zx, p.Zy)))}});
    return kOk;
  } catch (const drcss::InfeasibleWindow& e) {
    print({{"K", p.K}, {"M", p.M}, {"N", p.N}, {"Zx", p.Zx}, {"Zy", p.Zy},
           {"error", "infeasible-window"}, {"detail", e.what()}});
    return kUsage;
  }
}

// --- af ---------------------------------------------------------------------

int run_af(const std::string& in, const std::string& pair, const std::string& out,
           bool full, const drcss::Exec& exec) {
  std::size_t u = 0, v = 0;
  char comma = 0;
  std::istringstream ss(pair);
  if (!(ss >> u >> comma >> v) || comma != ',' || !ss.eof()) {
    throw UsageError("--pair must look like u,v");
  }
  const auto set = drcss::load_set(in);
  if (u >= set.set_size() || v >= set.set_size()) {
    throw UsageError("pair index out of range (K = " + std::to_string(set.set_size()) + ")");
  }
  if (!within_budget(set, full)) return kUsage;
  const auto grid = drcss::drcs_pcaf_grid(set.member(u), set.member(v), exec);
  drcss::write_text_file(out, drcss::grid_csv(grid));
  print({{"out", out}, {"u", u}, {"v", v}, {"N", grid.length()}});
  return kOk;
}

// --- reproduce --------------------------------------------------------------

int run_reproduce(int table, bool full, const std::string& out, const drcss::Exec& exec) {
  std::vector<drcss::ReproRow> rows;
  switch (table) {
    case 1: rows = drcss::reproduce_table1_rows(exec); break;
    case 3: rows = drcss::reproduce_table3(full, exec); break;
    case 4: rows = drcss::reproduce_table4(full, exec); break;
    default: throw UsageError("--table must be 1, 3 or 4");
  }
  json j = {{"table", table}, {"full", full}, {"rows", json::array()}};
  for (const auto& r : rows) {
    j["rows"].push_back(drcss::to_json(r));
    std::cout << (r.pass ? "PASS " : "FAIL ") << "table " << r.table << " " << r.label
              << " [" << r.mode << "] theta_max=" << drcss::fmt9(r.theta);
    if (r.rho) std::cout << " rho=" << drcss::fmt9(*r.rho);
    std::cout << "\n";
  }
  j["all_pass"] = drcss::all_pass(rows);
  if (!out.empty()) drcss::write_text_file(out, j.dump(2) + "\n");
  return drcss::all_pass(rows) ? kOk : kCertFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doppler-resilient complementary sequence set toolkit"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware parallelism)");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a set and certify its claim");
  construct->add_option("--method", ca.method, "theorem1|theorem2|theorem3|corollary2|theorem4")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "corollary2", "theorem4"}));
  construct->add_option("--p", ca.p, "Prime (field characteristic)");
  construct->add_option("--m", ca.m, "Extension degree");
  construct->add_option("--K", ca.K, "Set size");
  construct->add_option("--N", ca.N, "Length");
  construct->add_option("--t", ca.t, "Excluded flock index (theorem2)");
  construct->add_option("--L", ca.L, "Repetition factor (theorem4)");
  construct->add_option("--M", ca.M, "Size of a generated (M,M) CCC (theorem4)");
  construct->add_option("--fhss", ca.fhss_file, "fhss-v1 input (theorem1)");
  construct->add_option("--source", ca.source, "reed|titlebaum|cfr (theorem1 without --fhss)");
  construct->add_option("--ccc", ca.ccc_file, "drcss-phase-v1 CCC input (theorem4)");
  construct->add_option("--out", ca.out, "Output drcss-phase-v1 file")->required();
  construct->add_flag("--full", ca.full, "Allow sweeps beyond the cost guardrail");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Certify an object read from a file");
  verify->add_option("--kind", va.kind, "ocfhss|cfr|ads|ccc|drss|drcss")
      ->required()
      ->check(CLI::IsMember({"ocfhss", "cfr", "ads", "ccc", "drss", "drcss"}));
  verify->add_option("--in", va.in, "Input file")->required();
  verify->add_option("--Zx", va.zx, "Delay half-width of the window");
  verify->add_option("--Zy", va.zy, "Doppler half-width of the window");
  verify->add_flag("--full", va.full, "Allow sweeps beyond the cost guardrail");

  drcss::SetParams bp;
  std::optional<double> theta;
  auto* bound = app.add_subcommand("bound", "Evaluate the lower bound and optimality factor");
  bound->add_option("--K", bp.K)->required();
  bound->add_option("--M", bp.M)->required();
  bound->add_option("--N", bp.N)->required();
  bound->add_option("--Zx", bp.Zx)->required();
  bound->add_option("--Zy", bp.Zy)->required();
  bound->add_option("--theta", theta, "Measured peak magnitude");

  std::string af_in, af_pair, af_out;
  bool af_full = false;
  auto* af = app.add_subcommand("af", "Export one ambiguity grid as CSV");
  af->add_option("--in", af_in)->required();
  af->add_option("--pair", af_pair, "Member indices u,v")->required();
  af->add_option("--out", af_out)->required();
  af->add_flag("--full", af_full);

  int table = 0;
  bool rep_full = false;
  std::string rep_out;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a parameter table");
  reproduce->add_option("--table", table, "1, 3 or 4")->required()->check(CLI::IsMember({1, 3, 4}));
  reproduce->add_flag("--full", rep_full, "Sweep every row instead of using closed forms");
  reproduce->add_option("--out", rep_out, "JSON output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const drcss::Exec exec{threads};
  try {
    if (*construct) return run_construct(ca, exec);
    if (*verify) return run_verify(va, exec);
    if (*bound) return run_bound(bp, theta);
    if (*af) return run_af(af_in, af_pair, af_out, af_full, exec);
    if (*reproduce) return run_reproduce(table, rep_full, rep_out, exec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const drcss::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const drcss::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const drcss::CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kCertFailure;
  } catch (const drcss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertFailure;
  }
  return kUsage;
}
