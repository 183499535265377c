#pragma once

// Lower bound on the peak ambiguity magnitude of a low-ambiguity-zone set,
// the optimality factor derived from it, and the zero-zone size bound.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "drcss/errors.hpp"
#include "drcss/number_theory.hpp"

namespace drcss {

struct SetParams {
  std::int64_t K = 1;   // set size
  std::int64_t M = 1;   // flock size
  std::int64_t N = 1;   // (total) length
  std::int64_t Zx = 1;
  std::int64_t Zy = 1;
};

// theta_max >= (MN / sqrt(Zy)) * sqrt((K Zx Zy / (MN) - 1) / (K Zx - 1)).
inline double laz_bound(const SetParams& p) {
  require(p.K >= 1 && p.M >= 1 && p.N >= 1, "laz_bound: K, M, N must be >= 1");
  require(p.Zx >= 1 && p.Zy >= 1 && p.Zx <= p.N && p.Zy <= p.N,
          "laz_bound: need 1 <= Zx, Zy <= N");
  require(p.K * p.Zx > 1, "laz_bound: need K*Zx > 1");
  const std::int64_t area = p.K * p.Zx * p.Zy;
  const std::int64_t mn = p.M * p.N;
  if (area < mn) {
    throw InfeasibleWindow("laz_bound: K*Zx*Zy = " + std::to_string(area) +
                           " < M*N = " + std::to_string(mn) +
                           "; the bound does not constrain this window");
  }
  if (area == mn) return 0.0;
  const double ratio = static_cast<double>(area) / static_cast<double>(mn) - 1.0;
  return static_cast<double>(mn) / std::sqrt(static_cast<double>(p.Zy)) *
         std::sqrt(ratio / static_cast<double>(p.K * p.Zx - 1));
}

enum class Optimality {
  Optimal,
  NearOptimal,
  NotNearOptimal,
  ZazOptimal,
  ZazSuboptimal,
  ViolatesBound,
};

inline std::string_view to_string(Optimality c) {
  switch (c) {
    case Optimality::Optimal: return "optimal";
    case Optimality::NearOptimal: return "near-optimal";
    case Optimality::NotNearOptimal: return "not-near-optimal";
    case Optimality::ZazOptimal: return "zaz-optimal";
    case Optimality::ZazSuboptimal: return "zaz-suboptimal";
    case Optimality::ViolatesBound: return "violates-bound";
  }
  return "unknown";
}

struct OptimalityReport {
  SetParams params;
  double theta_max = 0.0;
  double bound = 0.0;
  double rho = 0.0;
  Optimality cls = Optimality::Optimal;
};

struct OptimalityTolerance {
  double zero = 1e-9;   // theta_max this small counts as a zero zone
  double unity = 1e-9;  // |rho - 1| this small counts as optimal
};

inline OptimalityReport optimality_factor(double theta_max,
                                          const SetParams& p,
                                          const OptimalityTolerance& tol = {}) {
  require(theta_max >= 0.0, "optimality_factor: theta_max must be >= 0");
  OptimalityReport rep{p, theta_max, laz_bound(p), 0.0, Optimality::Optimal};
  if (rep.bound == 0.0) {
    // Zero-zone boundary: the ratio is undefined; the zone-size bound governs.
    if (theta_max <= tol.zero) {
      rep.rho = 1.0;
      rep.cls = Optimality::Optimal;
    } else {
      rep.rho = std::numeric_limits<double>::infinity();
      rep.cls = Optimality::ViolatesBound;
    }
    return rep;
  }
  rep.rho = theta_max / rep.bound;
  if (std::abs(rep.rho - 1.0) <= tol.unity) {
    rep.cls = Optimality::Optimal;
  } else if (rep.rho < 1.0) {
    rep.cls = Optimality::ViolatesBound;
  } else if (rep.rho < 2.0) {
    rep.cls = Optimality::NearOptimal;
  } else {
    rep.cls = Optimality::NotNearOptimal;
  }
  return rep;
}

enum class ZazClass { Optimal, Suboptimal, ViolatesBound };

inline std::string_view to_string(ZazClass c) {
  switch (c) {
    case ZazClass::Optimal: return "optimal";
    case ZazClass::Suboptimal: return "suboptimal";
    case ZazClass::ViolatesBound: return "violates-bound";
  }
  return "unknown";
}

// K Zx Zy <= M N for any zero-ambiguity-zone set; equality is optimal.
inline ZazClass zaz_check(std::int64_t K, std::int64_t M, std::int64_t n_total,
                          std::int64_t Zx, std::int64_t Zy) {
  require(K >= 1 && M >= 1 && n_total >= 1 && Zx >= 1 && Zy >= 1,
          "zaz_check: parameters must be positive");
  const std::int64_t area = K * Zx * Zy;
  const std::int64_t mn = M * n_total;
  if (area == mn) return ZazClass::Optimal;
  return area < mn ? ZazClass::Suboptimal : ZazClass::ViolatesBound;
}

inline OptimalityReport zaz_report(const SetParams& p) {
  OptimalityReport rep{p, 0.0, 0.0, 1.0, Optimality::ZazOptimal};
  switch (zaz_check(p.K, p.M, p.N, p.Zx, p.Zy)) {
    case ZazClass::Optimal: rep.cls = Optimality::ZazOptimal; break;
    case ZazClass::Suboptimal: rep.cls = Optimality::ZazSuboptimal; break;
    case ZazClass::ViolatesBound: rep.cls = Optimality::ViolatesBound; break;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Closed-form optimality factors of the construction families, as functions
// of their defining parameter.

enum class FamilyTag { C1, C2, C3, CFR, ADS };

inline FamilyTag parse_family_tag(std::string_view s) {
  if (s == "C1") return FamilyTag::C1;
  if (s == "C2") return FamilyTag::C2;
  if (s == "C3") return FamilyTag::C3;
  if (s == "CFR") return FamilyTag::CFR;
  if (s == "ADS") return FamilyTag::ADS;
  throw InvalidArgument("unknown construction tag '" + std::string(s) + "'");
}

// C1: x = 2^m (K = x-2, M = N = x-1, theta = x-1).
// C2: x = p^m (K = M = x, N = x-1, theta = x).
// C3: x = p   (K = p, M = p^2, N = p(p-1), theta = p^2).
// CFR: x = N, K = p0 - 1 for the smallest prime factor p0 of N.
// ADS: x = N prime, K = 2 (theta = (N + sqrt N)/2, Zy = floor(N/2)).
inline double asymptotic_factor(FamilyTag tag, std::int64_t x) {
  const auto rho_of = [](double theta, SetParams p) {
    return theta / laz_bound(p);
  };
  switch (tag) {
    case FamilyTag::C1:
      require(x >= 4, "C1 needs 2^m >= 4");
      return rho_of(double(x - 1), {x - 2, x - 1, x - 1, x - 1, x - 1});
    case FamilyTag::C2: {
      require(x >= 3, "C2 needs p^m >= 3");
      const double q = double(x);
      return std::sqrt((q * (q - 1) - 1) / ((q - 2) * (q - 1)));
    }
    case FamilyTag::C3: {
      require(x >= 3, "C3 needs p >= 3");
      const double p = double(x);
      return std::sqrt((p * p * (p - 1) - 1) / (p * (p - 1) * (p - 2)));
    }
    case FamilyTag::CFR: {
      const std::int64_t p0 = smallest_prime_factor(x);
      require(x >= 2, "CFR needs N >= 2");
      return rho_of(double(x), {p0 - 1, x - 1, x, x, x});
    }
    case FamilyTag::ADS: {
      require(x >= 5, "ADS needs N >= 5");
      const double n = double(x);
      return rho_of((n + std::sqrt(n)) / 2.0, {2, (x - 1) / 2, x, x, x / 2});
    }
  }
  throw InvalidArgument("unknown construction tag");
}

struct FactorRow {
  std::int64_t parameter = 0;
  double rho = 0.0;
};

inline std::vector<FactorRow> asymptotic_factor_table(
    FamilyTag tag, const std::vector<std::int64_t>& sweep) {
  std::vector<FactorRow> rows;
  rows.reserve(sweep.size());
  for (auto x : sweep) rows.push_back({x, asymptotic_factor(tag, x)});
  return rows;
}

// True when rho strictly decreases along the sweep and stays >= 1.
inline bool converges_to_one(const std::vector<FactorRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rho < 1.0) return false;
    if (i > 0 && !(rows[i].rho < rows[i - 1].rho)) return false;
  }
  return true;
}

}  // namespace drcss
