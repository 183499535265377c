#pragma once

// Complete complementary codes under periodic correlation: M codes, each an
// M x N flock, whose summed correlations vanish except in-phase on the
// diagonal.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drcss/ambiguity.hpp"
#include "drcss/errors.hpp"
#include "drcss/phase.hpp"

namespace drcss {

struct CccWitness {
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t tau = 0;
  Complex value;
  double expected = 0.0;  // M*N on the in-phase diagonal, else 0
};

struct CccCheck {
  bool ok = true;
  std::string reason;
  std::optional<CccWitness> witness;
};

struct CCC {
  std::vector<DRCS> codes;

  std::size_t size() const { return codes.size(); }
  std::size_t length() const { return codes.front().length(); }

  DRCSSet as_set() const {
    return DRCSSet(codes, nlohmann::json{{"construction", "ccc"}});
  }
};

// Summed periodic correlation of two flocks at delay tau (AF at f = 0).
inline Complex flock_correlation(const EvaluatedDRCS& a, const EvaluatedDRCS& b,
                                 std::size_t tau) {
  const std::size_t n = a.length;
  Complex acc{0.0, 0.0};
  for (std::size_t m = 0; m < a.flock; ++m) {
    const Complex* ar = a.row(m);
    const Complex* br = b.row(m);
    for (std::size_t i = 0; i < n; ++i) acc += ar[i] * std::conj(br[(i + tau) % n]);
  }
  return acc;
}

inline CccCheck check_ccc(const std::vector<DRCS>& codes, double zero_tol = 1e-9) {
  if (codes.empty()) return {false, "empty code set", std::nullopt};
  const std::size_t m = codes.front().flock_size();
  const std::size_t n = codes.front().length();
  for (const auto& c : codes) {
    if (c.flock_size() != m || c.length() != n) {
      return {false, "codes do not share a shape", std::nullopt};
    }
  }
  if (codes.size() != m) {
    return {false, "set size " + std::to_string(codes.size()) +
                       " differs from flock size " + std::to_string(m),
            std::nullopt};
  }
  std::vector<EvaluatedDRCS> ev;
  for (const auto& c : codes) ev.push_back(evaluate(c));
  const double mn = static_cast<double>(m * n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t t = k; t < m; ++t) {
      for (std::size_t tau = 0; tau < n; ++tau) {
        const Complex r = flock_correlation(ev[k], ev[t], tau);
        const double expected = (k == t && tau == 0) ? mn : 0.0;
        if (std::abs(r - Complex(expected, 0.0)) > zero_tol) {
          return {false, "correlation identity violated",
                  CccWitness{k, t, tau, r, expected}};
        }
      }
    }
  }
  return {};
}

inline CCC certified_ccc(std::vector<DRCS> codes) {
  const auto chk = check_ccc(codes);
  if (!chk.ok) throw CertificationError("not a complete complementary code: " + chk.reason);
  return CCC{std::move(codes)};
}

// c^{(k)}_{m,n} = xi_M^{(m+k) n}.
inline CCC build_dft_ccc(std::int64_t m) {
  require(m >= 2, "DFT CCC needs M >= 2");
  check_denominator(m);
  std::vector<DRCS> codes;
  for (std::int64_t k = 0; k < m; ++k) {
    std::vector<UnitSequence> rows;
    for (std::int64_t r = 0; r < m; ++r) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(m));
      for (std::int64_t n = 0; n < m; ++n) e[n] = (r + k) * n;
      rows.push_back(root_sequence(e, m));
    }
    codes.emplace_back(std::move(rows));
  }
  return certified_ccc(std::move(codes));
}

// The binary (4,4) code used in the repetition example.
inline CCC fixture_example3() {
  static constexpr const char* kRows[4][4] = {
      {"+-+-", "++++", "+--+", "--++"},
      {"++++", "+-+-", "++--", "-++-"},
      {"+--+", "++--", "+-+-", "----"},
      {"++--", "+--+", "++++", "-+-+"},
  };
  std::vector<DRCS> codes;
  for (const auto& code : kRows) {
    std::vector<UnitSequence> rows;
    for (const char* row : code) {
      std::vector<std::int64_t> e;
      for (const char* c = row; *c; ++c) e.push_back(*c == '+' ? 0 : 1);
      rows.push_back(root_sequence(e, 2));
    }
    codes.emplace_back(std::move(rows));
  }
  return certified_ccc(std::move(codes));
}

}  // namespace drcss
