#pragma once

// Periodic ambiguity functions of unimodular sequences and of DRCS flocks.
//
//   AF_{u,v}(tau, f) = sum_i u_i * conj(v_{i+tau mod N}) * xi_N^{f*i}
//
// A flock AF is the sum of its row AFs. Grids store one period; any
// (tau, f) in (-N, N) x (-N, N) is answered by residue reduction.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drcss/errors.hpp"
#include "drcss/parallel.hpp"
#include "drcss/phase.hpp"

namespace drcss {

struct Tolerance {
  double zero = 1e-9;  // absolute, for "this cell vanishes"
  double rel = 1e-6;   // relative, for comparing nonzero magnitudes
};

inline std::size_t residue(std::int64_t x, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

// xi_N^k for k in [0, N).
inline ComplexVector roots_of_unity(std::size_t n) {
  ComplexVector w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = PhaseFraction(static_cast<std::int64_t>(k),
                         static_cast<std::int64_t>(n))
               .value();
  }
  return w;
}

class AmbiguityGrid {
 public:
  AmbiguityGrid() = default;
  explicit AmbiguityGrid(std::size_t n) : n_(n), values_(n * n) {}

  std::size_t length() const { return n_; }

  // Any integer delay/Doppler; reduced mod N.
  Complex at(std::int64_t tau, std::int64_t f) const {
    return values_[residue(tau, n_) * n_ + residue(f, n_)];
  }
  double magnitude(std::int64_t tau, std::int64_t f) const {
    return std::abs(at(tau, f));
  }

  Complex& cell(std::size_t tau, std::size_t f) { return values_[tau * n_ + f]; }
  const Complex& cell(std::size_t tau, std::size_t f) const {
    return values_[tau * n_ + f];
  }
  Complex* row(std::size_t tau) { return values_.data() + tau * n_; }

  const ComplexVector& values() const { return values_; }

 private:
  std::size_t n_ = 0;
  ComplexVector values_;
};

// Single-cell AF of two sequences.
inline Complex pcaf(const ComplexVector& u, const ComplexVector& v,
                    std::int64_t tau, std::int64_t f) {
  require(u.size() == v.size(), "pcaf: length mismatch");
  const std::size_t n = u.size();
  const std::size_t t = residue(tau, n);
  const std::size_t ff = residue(f, n);
  const ComplexVector w = roots_of_unity(n);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc += u[i] * std::conj(v[(i + t) % n]) * w[(ff * i) % n];
  }
  return acc;
}

inline Complex pcaf(const UnitSequence& u, const UnitSequence& v,
                    std::int64_t tau, std::int64_t f) {
  require(u.size() == v.size(), "pcaf: length mismatch");
  return pcaf(evaluate(u), evaluate(v), tau, f);
}

namespace detail {

// Row tau of a flock AF: form the summed lag product, then take its
// length-N DFT (positive exponent) with a fixed summation order.
inline void flock_grid_row(const EvaluatedDRCS& a, const EvaluatedDRCS& b,
                           const ComplexVector& w, std::size_t tau,
                           ComplexVector& lag, Complex* out) {
  const std::size_t n = a.length;
  for (std::size_t i = 0; i < n; ++i) lag[i] = Complex{0.0, 0.0};
  for (std::size_t m = 0; m < a.flock; ++m) {
    const Complex* ar = a.row(m);
    const Complex* br = b.row(m);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + tau;
      if (j >= n) j -= n;
      lag[i] += ar[i] * std::conj(br[j]);
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    Complex acc{0.0, 0.0};
    std::size_t k = 0;  // f*i mod n, advanced incrementally
    for (std::size_t i = 0; i < n; ++i) {
      acc += lag[i] * w[k];
      k += f;
      if (k >= n) k -= n;
    }
    out[f] = acc;
  }
}

}  // namespace detail

inline AmbiguityGrid flock_pcaf_grid(const EvaluatedDRCS& a,
                                     const EvaluatedDRCS& b,
                                     const Exec& exec = {1}) {
  require(a.flock == b.flock && a.length == b.length,
          "drcs_pcaf_grid: shape mismatch");
  const std::size_t n = a.length;
  AmbiguityGrid grid(n);
  const ComplexVector w = roots_of_unity(n);
  parallel_for(
      n,
      [&](std::size_t tau) {
        ComplexVector lag(n);
        detail::flock_grid_row(a, b, w, tau, lag, grid.row(tau));
      },
      exec);
  return grid;
}

inline AmbiguityGrid pcaf_grid(const ComplexVector& u, const ComplexVector& v) {
  require(u.size() == v.size(), "pcaf_grid: length mismatch");
  return flock_pcaf_grid(EvaluatedDRCS{1, u.size(), u},
                         EvaluatedDRCS{1, v.size(), v});
}

inline AmbiguityGrid pcaf_grid(const UnitSequence& u, const UnitSequence& v) {
  require(u.size() == v.size(), "pcaf_grid: length mismatch");
  return pcaf_grid(evaluate(u), evaluate(v));
}

inline AmbiguityGrid drcs_pcaf_grid(const DRCS& a, const DRCS& b,
                                    const Exec& exec = {1}) {
  require(a.flock_size() == b.flock_size() && a.length() == b.length(),
          "drcs_pcaf_grid: shape mismatch");
  return flock_pcaf_grid(evaluate(a), evaluate(b), exec);
}

// Pi = (-Zx, Zx) x (-Zy, Zy), delay first.
struct LazWindow {
  std::size_t zx = 1;
  std::size_t zy = 1;

  static LazWindow full(std::size_t n) { return {n, n}; }

  // Residues tau, f in [0, N) fall inside when some representative does.
  bool contains(std::size_t tau, std::size_t f, std::size_t n) const {
    const bool in_delay = tau < zx || tau + zx > n;
    const bool in_doppler = f < zy || f + zy > n;
    return in_delay && in_doppler;
  }

  void validate(std::size_t n) const {
    require(zx >= 1 && zy >= 1, "window bounds must be >= 1");
    require(zx <= n && zy <= n, "window (" + std::to_string(zx) + ", " +
                                    std::to_string(zy) +
                                    ") exceeds sequence length " +
                                    std::to_string(n));
  }
};

// Signed representative of a residue, in (-N/2, N/2].
inline std::int64_t signed_residue(std::size_t r, std::size_t n) {
  return 2 * r > n ? static_cast<std::int64_t>(r) - static_cast<std::int64_t>(n)
                   : static_cast<std::int64_t>(r);
}

struct AfWitness {
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t tau = 0;
  std::int64_t f = 0;
  double magnitude = 0.0;
};

struct AmbiguityReport {
  LazWindow window;
  std::size_t length = 0;
  double theta_a = 0.0;
  double theta_c = 0.0;
  double theta_max = 0.0;
  AfWitness auto_witness;
  std::optional<AfWitness> cross_witness;  // empty when K = 1
};

namespace detail {

// Largest in-window magnitude of one grid; strict '>' keeps the first
// cell in (tau, f) order, so ties resolve deterministically.
inline AfWitness grid_peak(const AmbiguityGrid& g, const LazWindow& win,
                           bool skip_origin) {
  const std::size_t n = g.length();
  AfWitness best;
  bool found = false;
  for (std::size_t tau = 0; tau < n; ++tau) {
    for (std::size_t f = 0; f < n; ++f) {
      if (skip_origin && tau == 0 && f == 0) continue;
      if (!win.contains(tau, f, n)) continue;
      const double mag = std::abs(g.cell(tau, f));
      if (!found || mag > best.magnitude) {
        best.tau = signed_residue(tau, n);
        best.f = signed_residue(f, n);
        best.magnitude = mag;
        found = true;
      }
    }
  }
  return best;
}

}  // namespace detail

inline std::vector<EvaluatedDRCS> evaluate(const DRCSSet& set) {
  std::vector<EvaluatedDRCS> out;
  out.reserve(set.set_size());
  for (const auto& c : set.members()) out.push_back(evaluate(c));
  return out;
}

// theta_a over members and Pi minus the origin; theta_c over unordered
// distinct pairs and all of Pi. |AF_{v,u}(tau,f)| = |AF_{u,v}(-tau,-f)| and
// Pi is symmetric, so unordered pairs cover both orders.
inline AmbiguityReport max_magnitudes(const DRCSSet& set,
                                      const LazWindow& window,
                                      const Exec& exec = {}) {
  const std::size_t n = set.length();
  window.validate(n);
  const auto evaluated = evaluate(set);
  const std::size_t k = set.set_size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = u; v < k; ++v) pairs.emplace_back(u, v);

  std::vector<AfWitness> peaks(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t p) {
        const auto [u, v] = pairs[p];
        const auto grid = flock_pcaf_grid(evaluated[u], evaluated[v]);
        AfWitness w = detail::grid_peak(grid, window, u == v);
        w.u = u;
        w.v = v;
        peaks[p] = w;
      },
      exec);

  AmbiguityReport rep;
  rep.window = window;
  rep.length = n;
  bool have_auto = false;
  for (const auto& w : peaks) {
    if (w.u == w.v) {
      if (!have_auto || w.magnitude > rep.theta_a) {
        rep.theta_a = w.magnitude;
        rep.auto_witness = w;
        have_auto = true;
      }
    } else if (!rep.cross_witness || w.magnitude > rep.theta_c) {
      rep.theta_c = w.magnitude;
      rep.cross_witness = w;
    }
  }
  rep.theta_max = std::max(rep.theta_a, rep.theta_c);
  return rep;
}

// ---------------------------------------------------------------------------
// Hamming correlation of frequency-hopping rows.

using HopRow = std::vector<std::int64_t>;

inline std::size_t hamming(std::span<const std::int64_t> x,
                           std::span<const std::int64_t> y, std::int64_t tau) {
  require(x.size() == y.size() && !x.empty(), "hamming: length mismatch");
  const std::size_t n = x.size();
  const std::size_t t = residue(tau, n);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) hits += x[i] == y[(i + t) % n] ? 1 : 0;
  return hits;
}

struct HammingWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t tau = 0;
  std::size_t hits = 0;
};

struct HammingReport {
  std::size_t h_auto = 0;
  std::size_t h_cross = 0;
  std::optional<HammingWitness> auto_witness;
  std::optional<HammingWitness> cross_witness;

  bool one_coincidence() const { return h_auto == 0 && h_cross <= 1; }
};

// H_a over 0 < tau < N, H_c over all tau and distinct pairs.
inline HammingReport hamming_max(std::span<const HopRow> rows) {
  require(!rows.empty(), "hamming_max: empty set");
  const std::size_t n = rows.front().size();
  for (const auto& r : rows) require(r.size() == n, "hamming_max: ragged rows");
  HammingReport rep;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a; b < rows.size(); ++b) {
      for (std::size_t tau = (a == b ? 1 : 0); tau < n; ++tau) {
        const std::size_t h = hamming(rows[a], rows[b], static_cast<std::int64_t>(tau));
        auto& slot = a == b ? rep.auto_witness : rep.cross_witness;
        auto& best = a == b ? rep.h_auto : rep.h_cross;
        if (!slot || h > best) {
          best = h;
          slot = HammingWitness{a, b, tau, h};
        }
      }
    }
  }
  return rep;
}

}  // namespace drcss
