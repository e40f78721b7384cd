#pragma once

#include <span>
#include <vector>

#include "euler/polynomial.hpp"

namespace euler {

/// Reduced Groebner basis, monic, sorted by leading monomial (descending).
/// When computed with tracking, cofactors[i][j] satisfy
///   basis[i] = sum_j cofactors[i][j] * generators[j].
struct GroebnerResult {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;

  bool tracked() const { return !cofactors.empty() || basis.empty(); }
  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Buchberger's algorithm with the sugar selection strategy, the product
/// criterion and the chain criterion.
GroebnerResult buchberger(const PolyRing& ring, std::span<const Polynomial> generators,
                          bool track_cofactors = false);

/// Writes f as sum_j c_j generators[j] + remainder using a tracked result;
/// returns the remainder (zero iff f lies in the ideal).
Polynomial express_with(const PolyRing& ring, const GroebnerResult& gb, std::size_t ngens,
                        const Polynomial& f, std::vector<Polynomial>& coefficients);

/// Staircase helpers on leading monomials of a Groebner basis.
/// Krull dimension of k[x]/LT; -1 for the unit ideal.
int staircase_dimension(std::span<const Polynomial> basis, std::size_t nvars);
/// Number of standard monomials; -1 when the quotient is not finite-dimensional.
long staircase_count(std::span<const Polynomial> basis, std::size_t nvars);

}  // namespace euler
