#pragma once

#include <span>
#include <string>
#include <vector>

#include "euler/expr.hpp"
#include "euler/field.hpp"
#include "euler/monomial.hpp"

namespace euler {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial: terms strictly descending in the owning PolyRing's
/// order, no zero coefficients. Only PolyRing creates non-trivial values.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  bool is_constant() const { return terms_.empty() || (size() == 1 && lead().mono.is_one()); }
  std::uint32_t total_degree() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

/// Ambient polynomial ring k[x_1..x_n] with a fixed monomial order; owns all
/// polynomial arithmetic.
class PolyRing {
 public:
  PolyRing(CoefficientField field, std::vector<std::string> names, MonomialOrder order);

  const CoefficientField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 when absent.
  int index_of(std::string_view name) const;

  Polynomial zero() const { return {}; }
  Polynomial constant(const Coeff& c) const;
  Polynomial one() const { return constant(Coeff(1)); }
  Polynomial variable(std::size_t i) const;
  Polynomial term(const Coeff& c, const Monomial& m) const;
  /// Sorts and combines arbitrary terms; coefficients are normalized into the field.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, const Coeff& c) const;
  Polynomial mul_term(const Polynomial& a, const Coeff& c, const Monomial& m) const;
  /// a - c*m*g in one merge pass.
  Polynomial sub_mul_term(const Polynomial& a, const Coeff& c, const Monomial& m,
                          const Polynomial& g) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial pow(const Polynomial& a, unsigned e) const;
  Polynomial monic(const Polynomial& a) const;

  /// Full reduction of p by `basis` (leading coefficients arbitrary). When
  /// `quotients` is non-null it receives q with p = sum q_i basis_i + remainder.
  Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                    std::vector<Polynomial>* quotients = nullptr) const;

  /// Re-sorts a polynomial produced under another order on the same variables.
  Polynomial reorder(const Polynomial& p) const;

  /// Renames variables: source variable i becomes variable var_map[i] here.
  Polynomial remap(const Polynomial& p, std::span<const int> var_map) const;

  /// Ring homomorphism from `source` sending variable i to images[i] (which
  /// live in this ring). Coefficients are mapped through from_rational.
  Polynomial evaluate(const PolyRing& source, const Polynomial& p,
                      std::span<const Polynomial> images) const;

  /// Throws UnknownVariable for names not in this ring.
  Polynomial from_expr(const Expr& e) const;
  Polynomial parse(std::string_view text) const;

  std::string to_string(const Polynomial& p) const;
  std::string to_string(const Monomial& m) const;
  std::string coeff_string(const Coeff& c) const;

 private:
  CoefficientField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

}  // namespace euler
