#pragma once

// Combinatorial raw material for the constructions: circular Florentine
// rectangles, one-coincidence frequency-hopping sets and almost difference
// sets. Every builder runs its checker before returning.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "drcss/ambiguity.hpp"
#include "drcss/errors.hpp"
#include "drcss/finite_field.hpp"
#include "drcss/number_theory.hpp"

namespace drcss {

// ---------------------------------------------------------------------------
// Frequency-hopping sequence sets.

struct FHSS {
  std::int64_t alphabet = 1;  // Q
  std::vector<HopRow> rows;
  std::optional<HammingReport> certificate;
  std::string source;

  std::size_t set_size() const { return rows.size(); }
  std::size_t length() const { return rows.empty() ? 0 : rows.front().size(); }
  bool one_coincidence() const {
    return certificate && certificate->one_coincidence();
  }
};

inline void validate_fhss_shape(const FHSS& f) {
  require(!f.rows.empty(), "FHSS needs at least one row");
  require(f.alphabet >= 1, "FHSS alphabet size must be >= 1");
  for (const auto& r : f.rows) {
    require(r.size() == f.rows.front().size() && !r.empty(),
            "FHSS rows must share a nonzero length");
    for (auto s : r) {
      require(s >= 0 && s < f.alphabet,
              "FHSS symbol " + std::to_string(s) + " outside Z_" +
                  std::to_string(f.alphabet));
    }
  }
}

inline HammingReport hamming_max(const FHSS& f) {
  validate_fhss_shape(f);
  return hamming_max(std::span<const HopRow>(f.rows));
}

// Attaches the exhaustive Hamming certificate.
inline FHSS certify(FHSS f) {
  f.certificate = hamming_max(f);
  return f;
}

inline FHSS fhss_titlebaum(std::int64_t p) {
  require(is_prime(static_cast<std::uint64_t>(p)),
          "Titlebaum FHSS needs a prime, got " + std::to_string(p));
  FHSS f{p, {}, std::nullopt, "titlebaum"};
  for (std::int64_t k = 0; k < std::max<std::int64_t>(p - 1, 1); ++k) {
    HopRow row(static_cast<std::size_t>(p));
    for (std::int64_t n = 0; n < p; ++n) row[n] = (k + 1) * n % p;
    f.rows.push_back(std::move(row));
  }
  f = certify(std::move(f));
  if (!f.one_coincidence()) throw CertificationError("Titlebaum FHSS is not OC");
  return f;
}

// Rows f_k(n) = alpha^n + k over GF(q), k ranging over all field elements.
inline FHSS fhss_reed(const FiniteField& field) {
  const std::int64_t q = field.order();
  require(q >= 3, "Reed-style FHSS needs q >= 3");
  FHSS f{q, {}, std::nullopt, "reed"};
  for (Element k = 0; k < q; ++k) {
    HopRow row(static_cast<std::size_t>(q - 1));
    for (std::int64_t n = 0; n < q - 1; ++n) row[n] = field.add(field.exp(n), k);
    f.rows.push_back(std::move(row));
  }
  f = certify(std::move(f));
  if (!f.one_coincidence()) {
    throw CertificationError(
        "Reed-style rule alpha^n + k did not certify as OC for q = " +
        std::to_string(q));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Circular Florentine rectangles.

struct CFRect {
  std::int64_t symbols = 0;  // N
  std::vector<HopRow> rows;
};

inline CFRect build_cfr(std::int64_t n) {
  require(n >= 2, "CFR needs N >= 2");
  const std::int64_t p0 = smallest_prime_factor(n);
  CFRect r{n, {}};
  for (std::int64_t i = 0; i < p0 - 1; ++i) {
    HopRow row(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) row[j] = (i + 1) * j % n;
    r.rows.push_back(std::move(row));
  }
  return r;
}

inline FHSS cfr_as_fhss(const CFRect& r) {
  return certify(FHSS{r.symbols, r.rows, std::nullopt, "cfr"});
}

struct CfrWitness {
  enum class Kind { NotPermutation, Coincidence } kind = Kind::NotPermutation;
  // NotPermutation: row, symbol repeated at positions pos_a and pos_b.
  // Coincidence: symbol b sits `step` places right of a in rows row and row2.
  std::size_t row = 0;
  std::size_t row2 = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::size_t step = 0;
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
};

struct CfrCheck {
  bool ok = true;
  std::optional<CfrWitness> witness;
};

// Exhaustive (a, b, step) scan with cyclic positions.
inline CfrCheck check_cfr(const std::vector<HopRow>& rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == n, "check_cfr: ragged rectangle");
    std::vector<std::optional<std::size_t>> seen(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto s = rows[r][j];
      if (s < 0 || s >= static_cast<std::int64_t>(n)) {
        CfrWitness w;
        w.row = r;
        w.a = s;
        w.pos_a = w.pos_b = j;
        return {false, w};
      }
      if (seen[s]) {
        CfrWitness w;
        w.row = r;
        w.a = s;
        w.pos_a = *seen[s];
        w.pos_b = j;
        return {false, w};
      }
      seen[s] = j;
    }
  }
  // owner[(a * n + b) * n + step] = first row placing b `step` right of a.
  std::vector<std::int64_t> owner(n * n * n, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t step = 1; step < n; ++step) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto a = static_cast<std::size_t>(rows[r][j]);
        const auto b = static_cast<std::size_t>(rows[r][(j + step) % n]);
        auto& slot = owner[(a * n + b) * n + step];
        if (slot >= 0) {
          CfrWitness w;
          w.kind = CfrWitness::Kind::Coincidence;
          w.row = static_cast<std::size_t>(slot);
          w.row2 = r;
          w.a = static_cast<std::int64_t>(a);
          w.b = static_cast<std::int64_t>(b);
          w.step = step;
          return {false, w};
        }
        slot = static_cast<std::int64_t>(r);
      }
    }
  }
  return {};
}

inline CfrCheck check_cfr(const CFRect& r) { return check_cfr(r.rows); }

// ---------------------------------------------------------------------------
// Almost difference sets.

struct ADS {
  std::int64_t modulus = 1;  // N
  std::vector<std::int64_t> elements;  // ascending
  std::int64_t lambda = 0;
  std::int64_t ads_t = 0;
  std::string convention;  // how the set was generated, when relevant
};

// Representation counts r(w) = #{(d, d') : d - d' = w} for w in Z_N.
inline std::vector<std::int64_t> difference_counts(
    std::int64_t n, const std::vector<std::int64_t>& d) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (auto a : d)
    for (auto b : d)
      if (a != b) ++counts[static_cast<std::size_t>(mod(a - b, n))];
  return counts;
}

struct AdsCheck {
  bool ok = false;
  std::int64_t lambda = 0;
  std::int64_t ads_t = 0;
  bool difference_set = false;
  // count value -> number of nonzero residues with that count
  std::map<std::int64_t, std::int64_t> histogram;
  // On failure, two nonzero residues whose counts are not adjacent values.
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

inline AdsCheck ads_check(std::int64_t n, const std::vector<std::int64_t>& d) {
  require(n >= 2, "ads_check: N must be >= 2");
  require(!d.empty(), "ads_check: empty subset");
  std::vector<std::int64_t> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "ads_check: repeated element");
  require(sorted.front() >= 0 && sorted.back() < n,
          "ads_check: element outside Z_N");

  const auto counts = difference_counts(n, sorted);
  AdsCheck out;
  std::int64_t lo_w = 1, hi_w = 1;
  for (std::int64_t w = 1; w < n; ++w) {
    ++out.histogram[counts[w]];
    if (counts[w] < counts[lo_w]) lo_w = w;
    if (counts[w] > counts[hi_w]) hi_w = w;
  }
  const std::int64_t lo = counts[lo_w];
  const std::int64_t hi = counts[hi_w];
  if (hi - lo > 1) {
    out.witness = std::make_pair(lo_w, hi_w);
    return out;
  }
  out.ok = true;
  out.lambda = lo;
  out.difference_set = hi == lo;
  out.ads_t = out.difference_set ? n - 1 : out.histogram[lo];
  return out;
}

// Certifies a claimed (lambda, t); a valid ADS with other parameters fails.
inline AdsCheck ads_verify(const ADS& a) {
  AdsCheck c = ads_check(a.modulus, a.elements);
  if (c.ok && (c.lambda != a.lambda || c.ads_t != a.ads_t)) c.ok = false;
  return c;
}

// Nonzero squares of a prime field with q = 1 mod 4.
inline ADS ads_quadratic_residue(const FiniteField& field) {
  const std::int64_t q = field.order();
  require(field.degree() == 1, "quadratic-residue ADS needs a prime field");
  require(q % 4 == 1, "quadratic-residue ADS needs q = 1 mod 4, got " +
                          std::to_string(q));
  ADS a{q, field.cyclotomic_class(2, 0).members, (q - 5) / 4, (q - 1) / 2,
        "cyclotomic class D_0 of order 2"};
  if (!ads_verify(a).ok) {
    throw CertificationError("quadratic residues mod " + std::to_string(q) +
                             " failed ADS certification");
  }
  return a;
}

struct AdsParams {
  std::int64_t n = 0, size = 0, lambda = 0, ads_t = 0;
};

// Target parameters over Z_{q-1} for odd q.
inline AdsParams lce_target(std::int64_t q) {
  if (q % 4 == 3) return {q - 1, (q - 1) / 2, (q - 3) / 4, (3 * q - 5) / 4};
  return {q - 1, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
}

// Index set { i in Z_{q-1} : alpha^i + shift lands in the chosen class }.
// Conventions are tried in a fixed order; the first that certifies the
// target parameters wins and is recorded in ADS::convention.
inline ADS ads_lce(const FiniteField& field) {
  const std::int64_t q = field.order();
  require(q % 2 == 1 && q >= 7, "LCE ADS needs an odd prime power q >= 7");
  const AdsParams target = lce_target(q);

  struct Convention {
    int shift;         // +1 or -1
    bool squares;      // nonzero squares vs nonsquares
    bool include_zero; // alpha^i + shift = 0 counts as a member
    const char* name;
  };
  static constexpr Convention kConventions[] = {
      {+1, true, false, "alpha^i + 1 is a nonzero square"},
      {-1, true, false, "alpha^i - 1 is a nonzero square"},
      {+1, false, false, "alpha^i + 1 is a nonsquare"},
      {-1, false, false, "alpha^i - 1 is a nonsquare"},
      {+1, true, true, "alpha^i + 1 is zero or a square"},
      {-1, true, true, "alpha^i - 1 is zero or a square"},
  };

  const Element shift_plus = 1;
  const Element shift_minus = field.neg(1);
  std::string tried;
  for (const auto& c : kConventions) {
    std::vector<std::int64_t> d;
    for (std::int64_t i = 0; i < q - 1; ++i) {
      const Element v = field.add(field.exp(i), c.shift > 0 ? shift_plus : shift_minus);
      const bool member = v == 0 ? c.include_zero
                                 : field.is_nonzero_square(v) == c.squares;
      if (member) d.push_back(i);
    }
    ADS cand{q - 1, d, target.lambda, target.ads_t, c.name};
    const auto chk = ads_check(cand.modulus, cand.elements);
    if (static_cast<std::int64_t>(d.size()) == target.size && chk.ok &&
        chk.lambda == target.lambda && chk.ads_t == target.ads_t) {
      return cand;
    }
    tried += "\n  " + std::string(c.name) + ": |D| = " + std::to_string(d.size()) +
             (chk.ok ? ", (lambda, t) = (" + std::to_string(chk.lambda) + ", " +
                           std::to_string(chk.ads_t) + ")"
                     : ", not an ADS");
  }
  throw CertificationError("no LCE convention met (" + std::to_string(target.n) +
                           ", " + std::to_string(target.size) + ", " +
                           std::to_string(target.lambda) + ", " +
                           std::to_string(target.ads_t) + ") for q = " +
                           std::to_string(q) + ":" + tried);
}

struct ExpSumProfile {
  std::vector<double> magnitude;  // |sum_d xi_N^{tau d}| for tau in [0, N)
  double max_nonzero_shift = 0.0;
  std::int64_t argmax = 0;
};

inline ExpSumProfile exp_sum_profile(std::int64_t n,
                                     const std::vector<std::int64_t>& d) {
  require(n >= 1, "exp_sum_profile: N must be >= 1");
  const ComplexVector w = roots_of_unity(static_cast<std::size_t>(n));
  ExpSumProfile out;
  out.magnitude.resize(static_cast<std::size_t>(n));
  for (std::int64_t tau = 0; tau < n; ++tau) {
    Complex acc{0.0, 0.0};
    for (auto x : d) acc += w[static_cast<std::size_t>(mod(tau * x, n))];
    out.magnitude[tau] = std::abs(acc);
    if (tau > 0 && (out.argmax == 0 || out.magnitude[tau] > out.max_nonzero_shift)) {
      out.max_nonzero_shift = out.magnitude[tau];
      out.argmax = tau;
    }
  }
  return out;
}

// sqrt(N + M - lambda - t - 1): the generic exponential-sum bound for an ADS.
inline double ads_sum_bound(const ADS& a) {
  const auto m = static_cast<std::int64_t>(a.elements.size());
  return std::sqrt(static_cast<double>(a.modulus + m - a.lambda - a.ads_t - 1));
}

}  // namespace drcss
