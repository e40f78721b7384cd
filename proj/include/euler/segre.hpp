#pragma once

#include <cstdint>
#include <vector>

#include "euler/quadric.hpp"

namespace euler {

/// (I, omega) with omega recorded by elements a_1..a_n of I whose classes
/// generate I/I^2.
struct OrientedIdeal {
  Ideal ideal;
  std::vector<RingElement> a;

  std::size_t n() const { return a.size(); }
  const RingPtr& ring() const { return ideal.ring(); }
};

/// a_i in I for all i and I = <a> + I^2.
bool check_orientation(const Ideal& I, const std::vector<RingElement>& a);
/// Throws NotOriented unless check_orientation holds.
OrientedIdeal make_oriented(Ideal I, std::vector<RingElement> a);

struct IdempotentLift {
  RingElement s;
  std::vector<RingElement> b;
};

/// s in I and b with I = <a, s> and s(1 - s) = a.b^t.
///
/// The generators of I outside <a> satisfy g = M g modulo <a> with entries of
/// M in I; det(Id - M) = 1 - e gives (1 - e) I in <a>. s is the normal form of
/// e modulo <a>, i.e. the unique idempotent of R/<a> generating I/<a>, so it
/// does not depend on the generator order. `seed` shuffles the generators
/// (0 keeps them), which can change b but never s.
IdempotentLift idempotent_lift(const OrientedIdeal& O, std::uint64_t seed = 0);

/// (a, b, s) from the lift; the base point for the unit ideal.
QuadricPoint segre_class(const OrientedIdeal& O, std::uint64_t seed = 0);

/// Determinant by expansion over column subsets; exact over any ring.
RingElement determinant(const std::vector<std::vector<RingElement>>& m);

}  // namespace euler
