#pragma once

// Doppler-resilient sequence sets (one row per member) used as seeds for
// flock modulation.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "drcss/ambiguity.hpp"
#include "drcss/errors.hpp"
#include "drcss/finite_field.hpp"
#include "drcss/number_theory.hpp"
#include "drcss/phase.hpp"

namespace drcss {

struct DRSS {
  std::vector<UnitSequence> sequences;
  LazWindow window;
  double alpha_max = 0.0;  // measured over the window
  AmbiguityReport report;
  std::vector<std::string> notes;

  std::size_t set_size() const { return sequences.size(); }
  std::size_t length() const { return sequences.front().size(); }

  DRCSSet as_set(nlohmann::json provenance = nlohmann::json::object()) const {
    std::vector<DRCS> members;
    members.reserve(sequences.size());
    for (const auto& s : sequences) members.emplace_back(std::vector<UnitSequence>{s});
    return DRCSSet(std::move(members), std::move(provenance));
  }
};

// Measures alpha_max over the window and flags degenerate sets.
inline DRSS certify_drss(std::vector<UnitSequence> seqs, LazWindow window,
                         const Exec& exec = {}) {
  require(!seqs.empty(), "DRSS needs at least one sequence");
  for (const auto& s : seqs) {
    require(s.size() == seqs.front().size(), "DRSS sequences must share a length");
  }
  DRSS d;
  d.sequences = std::move(seqs);
  d.window = window;
  d.report = max_magnitudes(d.as_set(), window, exec);
  d.alpha_max = d.report.theta_max;
  if (d.alpha_max >= static_cast<double>(d.length()) - 1e-9 && d.length() > 1) {
    d.notes.push_back("degenerate: peak sidelobe equals the in-phase value N");
  }
  return d;
}

// s_{k,n} = xi_N^{n^3 + k floor(N/K) n}; peak sqrt(N) over (-N, N) x (-Zy, Zy).
inline DRSS cubic_drss(std::int64_t n, std::int64_t k, const Exec& exec = {}) {
  require(n >= 3 && n % 2 == 1 && is_prime(static_cast<std::uint64_t>(n)),
          "cubic DRSS needs an odd prime length, got " + std::to_string(n));
  require(k >= 1 && k <= n, "cubic DRSS needs 1 <= K <= N");
  std::vector<std::string> notes;
  if (k == 1) {
    notes.push_back("K = 1 requested; built with K = 2 (needs 2 <= K <= N)");
    k = 2;
  }
  check_denominator(n);
  const std::int64_t zy = n / k;
  std::vector<UnitSequence> seqs;
  for (std::int64_t u = 0; u < k; ++u) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      e[i] = mod(mod(i * i, n) * i + u * zy * i, n);
    }
    seqs.push_back(root_sequence(e, n));
  }
  DRSS d = certify_drss(std::move(seqs),
                        {static_cast<std::size_t>(n), static_cast<std::size_t>(zy)},
                        exec);
  d.notes.insert(d.notes.begin(), notes.begin(), notes.end());

  const double target = std::sqrt(static_cast<double>(n));
  if (std::abs(d.alpha_max - target) > 1e-6) {
    throw CertificationError("cubic DRSS peak " + std::to_string(d.alpha_max) +
                             " != sqrt(N)");
  }
  // Cross AF on the zero-delay line vanishes for |f| < Zy.
  const auto evaluated = evaluate(d.as_set());
  for (std::int64_t u = 0; u < k; ++u) {
    for (std::int64_t v = u + 1; v < k; ++v) {
      const auto& a = evaluated[u].values;
      const auto& b = evaluated[v].values;
      for (std::int64_t f = -(zy - 1); f < zy; ++f) {
        if (std::abs(pcaf(a, b, 0, f)) > 1e-9) {
          throw CertificationError("cubic DRSS zero-delay cross AF nonzero at f = " +
                                   std::to_string(f));
        }
      }
    }
  }
  return d;
}

// s_n = xi_p^{tr(alpha^n)} of length q - 1, swept over the full region.
// The measured peak auto sidelobe is authoritative; the cited sqrt(q-1) is
// only compared against.
inline DRSS base_drs_expmap(const FiniteField& field, const Exec& exec = {}) {
  const std::int64_t q = field.order();
  const std::int64_t p = field.characteristic();
  require(q >= 5 && p % 2 == 1, "trace-exponential DRS needs odd q >= 5");
  check_denominator(p);
  std::vector<std::int64_t> e(static_cast<std::size_t>(q - 1));
  for (std::int64_t i = 0; i < q - 1; ++i) e[i] = field.trace(field.exp(i));
  const auto n = static_cast<std::size_t>(q - 1);
  DRSS d = certify_drss({root_sequence(e, p)}, LazWindow::full(n), exec);
  const double cited = std::sqrt(static_cast<double>(q - 1));
  if (d.alpha_max > cited + 1e-6) {
    d.notes.push_back("measured theta_a " + std::to_string(d.alpha_max) +
                      " exceeds cited sqrt(q-1) = " + std::to_string(cited));
  }
  return d;
}

// A set read from a file: each member must have flock size 1.
inline DRSS load_drss(const DRCSSet& set, std::optional<LazWindow> window = {},
                      const Exec& exec = {}) {
  require(set.flock_size() == 1, "DRSS file members must have exactly one row");
  std::vector<UnitSequence> seqs;
  for (const auto& m : set.members()) seqs.push_back(m.row(0));
  return certify_drss(std::move(seqs), window.value_or(LazWindow::full(set.length())),
                      exec);
}

}  // namespace drcss
