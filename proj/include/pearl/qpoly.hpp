#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "pearl/bigint.hpp"

namespace pearl {

/// Laurent polynomial in q with exponents in (1/2)Z and exact integer
/// coefficients. A stored key e stands for the monomial q^{e/2}; zero
/// coefficients are never stored, so the empty map is the zero polynomial.
class HalfLaurent {
 public:
  HalfLaurent() = default;

  static HalfLaurent constant(Int c);
  /// coeff * q^{exp_half/2}
  static HalfLaurent monomial(Int coeff, std::int64_t exp_half);

  bool is_zero() const { return terms_.empty(); }

  /// Largest exponent, in half units (degree = degree_half()/2).
  /// Throws std::domain_error on the zero polynomial.
  std::int64_t degree_half() const;

  Int coeff_half(std::int64_t exp_half) const;

  /// Coefficient at exponent degree - cod; throws on the zero polynomial.
  Int codegree_coeff(std::int64_t cod) const;

  /// Sum of all coefficients (exact specialization q -> 1).
  Int eval_at_one() const;

  /// q -> q^k: every exponent multiplied by k (k >= 1).
  HalfLaurent substituted(std::int64_t k) const;

  bool symmetric_under_inversion() const;      // p(q) == p(1/q)
  bool antisymmetric_under_inversion() const;  // p(q) == -p(1/q)

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(const Int& s, const HalfLaurent& p);
  HalfLaurent operator-() const;

  bool operator==(const HalfLaurent&) const = default;

  /// Canonical text form, bit-stable: terms sorted by descending exponent,
  /// e.g. "q^2 + 2*q - 6 + 2*q^-1 + q^-2" or "q^(1/2) - q^(-1/2)".
  std::string to_string() const;

  const std::map<std::int64_t, Int>& terms() const { return terms_; }

  void set_coeff_half(std::int64_t exp_half, Int c);

 private:
  std::map<std::int64_t, Int> terms_;
};

/// [alpha]_- = q^{alpha/2} - q^{-alpha/2}; alpha = 0 is rejected.
HalfLaurent bracket_minus(std::int64_t alpha);

/// Exact quotient in the half-exponent Laurent ring. A nonzero remainder
/// signals a broken divisibility invariant upstream and throws.
HalfLaurent exact_divide(const HalfLaurent& p, const HalfLaurent& d);

HalfLaurent qpow(const HalfLaurent& p, unsigned e);

inline HalfLaurent substitute_power(const HalfLaurent& p, std::int64_t k) { return p.substituted(k); }
inline Int eval_at_one(const HalfLaurent& p) { return p.eval_at_one(); }
inline Int codegree_coeff(const HalfLaurent& p, std::int64_t cod) { return p.codegree_coeff(cod); }

inline std::ostream& operator<<(std::ostream& os, const HalfLaurent& p) {
  return os << p.to_string();
}

}  // namespace pearl
