#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "euler/buchberger.hpp"
#include "euler/polynomial.hpp"

namespace euler {

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

/// Finitely presented commutative ring k[x_1..x_n]/Q. The reduced Groebner
/// basis of Q is computed once at construction; every element is stored as
/// its normal form, so equality is structural.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
  struct Private {};

 public:
  /// Throws DuplicateVariable, CharacteristicTwo (via the field), ParseError
  /// and UnknownVariable.
  static RingPtr make(CoefficientField field, std::vector<std::string> variables,
                      const std::vector<std::string>& relations,
                      OrderKind order = OrderKind::DegRevLex);
  static RingPtr make(CoefficientField field, std::vector<std::string> variables,
                      const std::vector<ExprPtr>& relations, OrderKind order = OrderKind::DegRevLex);
  static RingPtr make(PolyRing ambient, std::vector<Polynomial> relations);

  PresentedRing(Private, PolyRing ambient, std::vector<Polynomial> relations);

  const PolyRing& poly() const { return ambient_; }
  const CoefficientField& field() const { return ambient_.field(); }
  std::size_t nvars() const { return ambient_.nvars(); }
  const std::vector<std::string>& variables() const { return ambient_.names(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& relation_basis() const { return relation_basis_; }

  Polynomial normal_form(const Polynomial& p) const;
  /// Krull dimension of the ring; -1 for the zero ring.
  int dimension() const { return dimension_; }

  /// R[T]: one extra variable named T (or T', T'' ... on collision) appended
  /// last; relations unchanged. Cached, so repeated calls return one object.
  RingPtr homotopy_extension() const;
  /// Index of the appended variable inside homotopy_extension().
  std::size_t homotopy_variable() const { return nvars(); }
  /// Non-null when this ring was produced by homotopy_extension().
  RingPtr homotopy_base() const { return base_.lock(); }

  std::string describe() const;

 private:
  PolyRing ambient_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> relation_basis_;
  int dimension_ = 0;

  mutable std::once_flag extension_once_;
  mutable RingPtr extension_;
  std::weak_ptr<const PresentedRing> base_;
};

/// Element of a PresentedRing held in normal form.
class RingElement {
 public:
  RingElement() = default;
  /// Normalizes `value` modulo the ring's relations.
  RingElement(RingPtr ring, const Polynomial& value);

  static RingElement zero(RingPtr ring) { return RingElement(std::move(ring), Polynomial()); }
  static RingElement one(RingPtr ring);
  static RingElement constant(RingPtr ring, const Coeff& c);
  static RingElement variable(RingPtr ring, std::string_view name);
  /// Parses and normalizes an expression over the ring's variables.
  static RingElement parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement pow(unsigned e) const;
  RingElement scaled(const Coeff& c) const;

  bool operator==(const RingElement& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Polynomial value_;
};

/// Throws RingMismatch unless both rings are the same object.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

/// sum_i a_i b_i
RingElement dot(std::span<const RingElement> a, std::span<const RingElement> b);

/// Ring homomorphism source -> target given by the images of the source
/// variables. The caller is responsible for the images satisfying the
/// source relations; apply() does not verify it.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<RingElement> images);

  RingElement apply(const RingElement& x) const;
  RingElement apply_polynomial(const Polynomial& p) const;
  /// True when every source relation maps to zero.
  bool well_defined() const;

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

/// Evaluates the homotopy variable of R[T] at the constant c (T -> c) and
/// renormalizes in R. Throws UnknownVariable when the element's ring is not
/// a homotopy extension.
RingElement substitute(const RingElement& p, const Coeff& c);
/// Same, with T mapped to an arbitrary element of R.
RingElement substitute(const RingElement& p, const RingElement& value);

/// The element p of R viewed inside R[T].
RingElement lift_to_homotopy(const RingElement& p);
/// The variable T of R[T].
RingElement homotopy_parameter(const RingPtr& base);

}  // namespace euler
