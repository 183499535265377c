#pragma once

// GF(p^m) in polynomial basis. Elements are integer ids: the coefficient
// vector (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... packs to sum c_j p^j, which
// identifies GF(q) with Z_q as a symbol alphabet.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "drcss/errors.hpp"
#include "drcss/number_theory.hpp"

namespace drcss {

using Element = std::int64_t;

inline constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 20;

namespace detail {

using Poly = std::vector<std::int64_t>;  // low-order coefficient first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over Z_p.
inline Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = mod(a[shift + j] - lead * b[j], p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

// Monic polynomial of degree `degree` whose lower coefficients pack to `low`.
inline Poly monic_from_id(std::int64_t low, std::size_t degree, std::int64_t p) {
  Poly out(degree + 1, 0);
  for (std::size_t j = 0; j < degree; ++j) {
    out[j] = low % p;
    low /= p;
  }
  out[degree] = 1;
  return out;
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::int64_t count = ipow(p, static_cast<std::int64_t>(d));
    for (std::int64_t low = 0; low < count; ++low) {
      if (poly_mod(f, monic_from_id(low, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

struct CyclotomicClass {
  std::int64_t order = 0;  // e
  std::int64_t index = 0;  // i
  std::vector<Element> members;  // ascending element ids
};

class FiniteField {
 public:
  // Smallest-first search for the modulus and the primitive element, so the
  // same (p, m) always yields the same field.
  FiniteField(std::int64_t p, std::int64_t m, std::int64_t cap = kDefaultFieldCap)
      : p_(p), m_(m) {
    require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)),
            "field characteristic " + std::to_string(p) + " is not prime");
    require(m >= 1, "extension degree must be >= 1");
    q_ = 1;
    for (std::int64_t j = 0; j < m; ++j) {
      q_ *= p;
      require(q_ <= cap, "field order exceeds cap " + std::to_string(cap));
    }
    find_modulus();
    find_primitive_element();
  }

  std::int64_t characteristic() const { return p_; }
  std::int64_t degree() const { return m_; }
  std::int64_t order() const { return q_; }
  Element primitive_element() const { return alpha_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const {
    if (m_ == 1) return (a + b) % p_;
    Element out = 0;
    std::int64_t place = 1;
    for (std::int64_t j = 0; j < m_; ++j) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  Element neg(Element a) const {
    if (m_ == 1) return (p_ - a) % p_;
    Element out = 0;
    std::int64_t place = 1;
    for (std::int64_t j = 0; j < m_; ++j) {
      out += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>((log_[a] + log_[b]) % (q_ - 1))];
  }

  Element inv(Element a) const {
    require(a != 0, "zero has no inverse");
    return exp_[static_cast<std::size_t>(mod(-log_[a], q_ - 1))];
  }

  Element pow(Element a, std::int64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    return exp_[static_cast<std::size_t>(mod(log_[a] * mod(k, q_ - 1), q_ - 1))];
  }

  // alpha^k for any integer k.
  Element exp(std::int64_t k) const {
    return exp_[static_cast<std::size_t>(mod(k, q_ - 1))];
  }

  // Discrete log base alpha, in [0, q-1).
  std::int64_t log(Element a) const {
    require(a > 0 && a < q_, "log of zero or out-of-range element");
    return log_[a];
  }

  bool is_nonzero_square(Element a) const {
    if (a == 0) return false;
    if (p_ == 2) return true;
    return log_[a] % 2 == 0;
  }

  // Absolute trace to the prime subfield; result is an id in [0, p).
  Element trace(Element a) const {
    Element acc = 0;
    Element power = a;
    for (std::int64_t j = 0; j < m_; ++j) {
      acc = add(acc, power);
      power = pow(power, p_);
    }
    require(acc < p_, "trace left the prime subfield");
    return acc;
  }

  CyclotomicClass cyclotomic_class(std::int64_t e, std::int64_t i) const {
    require(e >= 1 && (q_ - 1) % e == 0,
            "cyclotomic order e must divide q - 1");
    require(i >= 0 && i < e, "cyclotomic index must lie in [0, e)");
    CyclotomicClass c{e, i, {}};
    const std::int64_t f = (q_ - 1) / e;
    c.members.reserve(static_cast<std::size_t>(f));
    for (std::int64_t j = 0; j < f; ++j) c.members.push_back(exp(j * e + i));
    std::sort(c.members.begin(), c.members.end());
    return c;
  }

 private:
  detail::Poly unpack(Element a) const {
    detail::Poly out(static_cast<std::size_t>(m_), 0);
    for (auto& c : out) {
      c = a % p_;
      a /= p_;
    }
    detail::trim(out);
    return out;
  }

  Element pack(const detail::Poly& a) const {
    Element out = 0;
    std::int64_t place = 1;
    for (auto c : a) {
      out += c * place;
      place *= p_;
    }
    return out;
  }

  Element slow_mul(Element a, Element b) const {
    return pack(detail::poly_mod(detail::poly_mul(unpack(a), unpack(b), p_),
                                 modulus_, p_));
  }

  Element slow_pow(Element a, std::int64_t k) const {
    Element result = 1;
    while (k > 0) {
      if (k & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return result;
  }

  void find_modulus() {
    const std::int64_t count = q_;  // p^m choices of lower coefficients
    for (std::int64_t low = 0; low < count; ++low) {
      auto f = detail::monic_from_id(low, static_cast<std::size_t>(m_), p_);
      if (detail::is_irreducible(f, p_)) {
        modulus_ = std::move(f);
        return;
      }
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
  }

  void find_primitive_element() {
    const auto divisors = prime_divisors(q_ - 1);
    for (Element g = 1; g < q_; ++g) {
      bool primitive = true;
      for (auto r : divisors) {
        if (slow_pow(g, (q_ - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      alpha_ = g;
      exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
      log_.assign(static_cast<std::size_t>(q_), -1);
      Element x = 1;
      for (std::int64_t k = 0; k < q_ - 1; ++k) {
        exp_[static_cast<std::size_t>(k)] = x;
        log_[static_cast<std::size_t>(x)] = k;
        x = slow_mul(x, g);
      }
      return;
    }
    throw Error("no primitive element found");
  }

  std::int64_t p_ = 2;
  std::int64_t m_ = 1;
  std::int64_t q_ = 2;
  detail::Poly modulus_;
  Element alpha_ = 1;
  std::vector<Element> exp_;
  std::vector<std::int64_t> log_;
};

inline FiniteField make_field(std::int64_t p, std::int64_t m,
                              std::int64_t cap = kDefaultFieldCap) {
  return FiniteField(p, m, cap);
}

// GF(q) for a prime power q; throws if q is not one.
inline FiniteField make_field_of_order(std::int64_t q,
                                       std::int64_t cap = kDefaultFieldCap) {
  require(q >= 2, "field order must be >= 2");
  const std::int64_t p = smallest_prime_factor(q);
  std::int64_t m = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  require(rest == 1, std::to_string(q) + " is not a prime power");
  return FiniteField(p, m, cap);
}

}  // namespace drcss
