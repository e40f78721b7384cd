#pragma once

#include <gmpxx.h>

#include <string>

namespace euler {

using Coeff = mpq_class;

/// Exact coefficient arithmetic over QQ or a prime field F_p with p odd.
///
/// Residues mod p are stored as integers in [0, p) inside an mpq_class so
/// both kinds share one coefficient type; every operation returns a
/// canonical value.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  /// Throws CharacteristicTwo for p = 2 and NotPrime for composite p.
  static CoefficientField prime(unsigned long p);

  bool is_rational() const noexcept { return p_ == 0; }
  unsigned long characteristic() const noexcept { return p_; }

  /// Maps an arbitrary rational into the field (fails for p | denominator).
  Coeff from_rational(const mpq_class& q) const;
  Coeff from_int(long v) const { return from_rational(mpq_class(v)); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  static bool is_one(const Coeff& a) { return a == 1; }

  /// "QQ" or "F<p>".
  std::string name() const;

  friend bool operator==(const CoefficientField& a, const CoefficientField& b) {
    return a.p_ == b.p_;
  }

 private:
  explicit CoefficientField(unsigned long p) : p_(p), modulus_(p) {}

  Coeff reduce(const mpz_class& v) const;

  unsigned long p_;
  mpz_class modulus_;
};

}  // namespace euler
