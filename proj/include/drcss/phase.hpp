#pragma once

// Exact roots-of-unity sequences and complementary-set matrices.
//
// Every entry is stored as a reduced rational phase num/den, meaning the
// complex value exp(2*pi*i*num/den). Complex doubles appear only through
// evaluate(), right before correlation sums are taken.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "drcss/errors.hpp"

namespace drcss {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr std::int64_t kDefaultMaxDenominator = 1'000'000;

// Throws if a construction would need a root of unity of order above `cap`.
inline void check_denominator(std::int64_t den,
                              std::int64_t cap = kDefaultMaxDenominator) {
  if (den < 1 || den > cap) {
    throw InvalidArgument("phase denominator " + std::to_string(den) +
                          " outside [1, " + std::to_string(cap) + "]");
  }
}

class PhaseFraction {
 public:
  constexpr PhaseFraction() = default;

  // Any integers with den >= 1; the value is reduced into [0, 1).
  constexpr PhaseFraction(std::int64_t num, std::int64_t den) {
    if (den < 1) throw InvalidArgument("phase denominator must be >= 1");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr bool is_zero() const { return num_ == 0; }

  // Complex conjugate: the negated phase.
  constexpr PhaseFraction conj() const { return {-num_, den_}; }

  Complex value() const {
    if (num_ == 0) return {1.0, 0.0};
    // Fold to the nearest quarter turn so that +-1 and +-i come out exact.
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                         static_cast<double>(den_);
    if (4 * num_ % den_ == 0) {
      switch (4 * num_ / den_) {
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        case 3: return {0.0, -1.0};
        default: break;
      }
    }
    return std::polar(1.0, angle);
  }

  friend constexpr bool operator==(const PhaseFraction&,
                                   const PhaseFraction&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// xi_Q^e as an exact phase.
constexpr PhaseFraction phase_of_root(std::int64_t e, std::int64_t q) {
  if (q < 1) throw InvalidArgument("root order Q must be >= 1");
  return PhaseFraction(e, q);
}

// Phases add mod 1 over the lcm of the denominators.
constexpr PhaseFraction phase_mul(const PhaseFraction& a,
                                  const PhaseFraction& b) {
  const std::int64_t l = std::lcm(a.den(), b.den());
  const std::int64_t na = a.num() * (l / a.den());
  const std::int64_t nb = b.num() * (l / b.den());
  return PhaseFraction((na + nb) % l, l);
}

constexpr PhaseFraction operator*(const PhaseFraction& a,
                                  const PhaseFraction& b) {
  return phase_mul(a, b);
}

constexpr PhaseFraction phase_pow(const PhaseFraction& a, std::int64_t k) {
  // num*k may overflow for huge k; reduce k mod den first.
  std::int64_t kk = k % a.den();
  if (kk < 0) kk += a.den();
  return PhaseFraction(a.num() * kk, a.den());
}

class UnitSequence {
 public:
  UnitSequence() = default;
  explicit UnitSequence(std::vector<PhaseFraction> entries)
      : entries_(std::move(entries)) {
    require(!entries_.empty(), "unit sequence must have length >= 1");
  }

  std::size_t size() const { return entries_.size(); }
  const PhaseFraction& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<PhaseFraction>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const UnitSequence&, const UnitSequence&) = default;

 private:
  std::vector<PhaseFraction> entries_;
};

inline ComplexVector evaluate(const UnitSequence& seq) {
  ComplexVector out;
  out.reserve(seq.size());
  for (const auto& p : seq) out.push_back(p.value());
  return out;
}

// One Doppler-resilient complementary sequence: M rows of common length N.
class DRCS {
 public:
  DRCS() = default;
  explicit DRCS(std::vector<UnitSequence> rows) : rows_(std::move(rows)) {
    require(!rows_.empty(), "DRCS needs at least one row");
    for (const auto& r : rows_) {
      require(r.size() == rows_.front().size(),
              "DRCS rows must share a common length");
    }
  }

  std::size_t flock_size() const { return rows_.size(); }
  std::size_t length() const { return rows_.front().size(); }
  const UnitSequence& row(std::size_t m) const { return rows_[m]; }
  const std::vector<UnitSequence>& rows() const { return rows_; }

  friend bool operator==(const DRCS&, const DRCS&) = default;

 private:
  std::vector<UnitSequence> rows_;
};

// Flock rows evaluated to complex doubles, row-major M x N.
struct EvaluatedDRCS {
  std::size_t flock = 0;
  std::size_t length = 0;
  ComplexVector values;

  const Complex* row(std::size_t m) const { return values.data() + m * length; }
};

inline EvaluatedDRCS evaluate(const DRCS& code) {
  EvaluatedDRCS out{code.flock_size(), code.length(), {}};
  out.values.reserve(out.flock * out.length);
  for (const auto& r : code.rows()) {
    for (const auto& p : r) out.values.push_back(p.value());
  }
  return out;
}

// A family of K DRCS sharing (M, N), plus where it came from.
class DRCSSet {
 public:
  DRCSSet() = default;
  DRCSSet(std::vector<DRCS> members, nlohmann::json provenance)
      : members_(std::move(members)), provenance_(std::move(provenance)) {
    require(!members_.empty(), "DRCS set needs at least one member");
    for (const auto& c : members_) {
      require(c.flock_size() == members_.front().flock_size() &&
                  c.length() == members_.front().length(),
              "DRCS set members must share (M, N)");
    }
    if (provenance_.is_null()) provenance_ = nlohmann::json::object();
  }

  std::size_t set_size() const { return members_.size(); }
  std::size_t flock_size() const { return members_.front().flock_size(); }
  std::size_t length() const { return members_.front().length(); }

  const DRCS& member(std::size_t k) const { return members_[k]; }
  const std::vector<DRCS>& members() const { return members_; }

  const nlohmann::json& provenance() const { return provenance_; }
  nlohmann::json& provenance() { return provenance_; }

 private:
  std::vector<DRCS> members_;
  nlohmann::json provenance_ = nlohmann::json::object();
};

// Helper for constructions: a row of xi_Q^{e_n}.
inline UnitSequence root_sequence(const std::vector<std::int64_t>& exponents,
                                  std::int64_t q) {
  std::vector<PhaseFraction> entries;
  entries.reserve(exponents.size());
  for (auto e : exponents) entries.push_back(phase_of_root(e, q));
  return UnitSequence(std::move(entries));
}

}  // namespace drcss
