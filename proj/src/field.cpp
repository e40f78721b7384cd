#include "euler/field.hpp"

#include "euler/errors.hpp"

namespace euler {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::EquationViolated: return "EquationViolated";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::NotOriented: return "NotOriented";
    case ErrorKind::MoveFailed: return "MoveFailed";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::NotCompleteIntersection: return "NotCompleteIntersection";
    case ErrorKind::NotComaximal: return "NotComaximal";
    case ErrorKind::HeightViolation: return "HeightViolation";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::Unimodularity: return "Unimodularity";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
  }
  return "Unknown";
}

CoefficientField CoefficientField::prime(unsigned long p) {
  if (p == 2) throw Error(ErrorKind::CharacteristicTwo, "characteristic 2 is not supported");
  mpz_class mp(p);
  if (p < 2 || mpz_probab_prime_p(mp.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return CoefficientField(p);
}

Coeff CoefficientField::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return Coeff(r);
}

Coeff CoefficientField::from_rational(const mpq_class& q) const {
  if (p_ == 0) return q;
  mpz_class den = q.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw Error(ErrorKind::ParseError,
                "denominator divisible by the characteristic " + std::to_string(p_));
  return reduce(mpz_class(q.get_num() * inv));
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= modulus_) s -= modulus_;
  return Coeff(s);
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += modulus_;
  return Coeff(s);
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a * b;
  return reduce(mpz_class(a.get_num() * b.get_num()));
}

Coeff CoefficientField::neg(const Coeff& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Coeff(mpz_class(modulus_ - a.get_num()));
}

Coeff CoefficientField::inv(const Coeff& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
  return Coeff(r);
}

std::string CoefficientField::name() const {
  return p_ == 0 ? std::string("QQ") : "F" + std::to_string(p_);
}

}  // namespace euler
