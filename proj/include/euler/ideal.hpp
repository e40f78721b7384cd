#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "euler/ring.hpp"

namespace euler {

/// Krull dimension of R/I and height of I. dim = kEmpty for the zero ring
/// R/I (I the unit ideal), where height = kInfinite.
struct DimensionHeight {
  static constexpr int kEmpty = -1;
  static constexpr int kInfinite = INT_MAX;
  int dim;
  int height;
  bool empty() const { return dim == kEmpty; }
};

/// e in I, e' in J, e + e' = 1.
struct ComaximalityWitness {
  RingElement e;
  RingElement e_prime;
};

/// Finitely generated ideal of a PresentedRing. Copies share the generator
/// list and the Groebner cache; caches are filled on first demand under a
/// mutex and never change afterwards.
///
/// All Groebner data lives in the ambient polynomial ring: the basis of an
/// ideal I of k[x]/Q is the reduced basis of Q + I.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<RingElement> generators);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return *gens_; }
  std::size_t size() const { return gens_->size(); }

  /// Reduced basis of Q + I in the ring's order (cached).
  const std::vector<Polynomial>& basis() const;
  /// Reduced basis of Q + I in another order on the same variables, sorted
  /// in that order. Cached per order.
  std::vector<Polynomial> groebner_basis(const MonomialOrder& order) const;
  /// The basis() elements that are nonzero in R, as ring elements.
  std::vector<RingElement> groebner_elements() const;

  bool contains(const RingElement& f) const;
  bool contains_all(const std::vector<RingElement>& fs) const;
  /// Normal form of f modulo I (as an element of R).
  RingElement reduce(const RingElement& f) const;
  bool is_unit() const;
  bool is_zero() const;
  bool subset_of(const Ideal& other) const;
  bool operator==(const Ideal& other) const;

  /// Coefficients c with f = sum c_i generators_i in R. Throws NotMember.
  std::vector<RingElement> express(const RingElement& f) const;

  DimensionHeight dimension_height() const;
  /// dim_k R/I; throws NotZeroDimensional when infinite. 0 for the unit ideal.
  long vector_space_dimension() const;

  std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::shared_ptr<const std::vector<RingElement>> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// I^k with generators the distinct k-fold products of the reduced basis.
Ideal ideal_power(const Ideal& a, unsigned k);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// I : g
Ideal ideal_quotient(const Ideal& a, const RingElement& g);
/// I : J
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

/// (e, e') when I + J = R, nullopt otherwise. Deterministic for fixed inputs.
std::optional<ComaximalityWitness> comaximal_witness(const Ideal& a, const Ideal& b);

}  // namespace euler
