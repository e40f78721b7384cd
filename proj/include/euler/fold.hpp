#pragma once

#include <vector>

#include "euler/quadric.hpp"

namespace euler {

/// The fold map on the Jouanolou device as a point (c, delta, w w') of Q_2n
/// over the device ring, with the lifting data it was built from.
struct FoldMap {
  DevicePresentation device;
  RingPtr quadric;  // coordinate ring of Q_2n, target of the sections
  /// c_i = x'_i(u.x + u_{n+1} z) + x_i(v.x' + v_{n+1} z'). Kept for reference:
  /// it is congruent to x only modulo I, and does not generate I/I^2 on
  /// the whole device (e.g. at x = z = 0, x' = 1, u_1 = -1, v_1 = 1 when n = 1).
  std::vector<RingElement> c_displayed;
  /// c_i = (v.x' + v_{n+1} z')^2 x_i + (u.x + u_{n+1} z)^2 x'_i, congruent to x
  /// modulo I^2 and to x' modulo I'^2; the lifts are taken with respect to it.
  std::vector<RingElement> c;
  RingElement w, w_prime;
  std::vector<RingElement> d, d_prime;
  std::vector<RingElement> delta;
  RingElement ww;

  QuadricPoint point() const { return QuadricPoint(c, delta, ww); }
  QuadricPoint restrict_left() const;
  QuadricPoint restrict_right() const;
};

/// Builds the fold map for n in {1, 2} (UnsupportedN otherwise).
///
/// With `normalize` the lifts w, w' and the vectors d, d' are adjusted by
/// elements of <c> (and, for d, by Koszul syzygies of c) so that both
/// section restrictions are exactly the identity point. Without it the raw
/// lifts are returned; their restrictions agree with the identity only up to
/// the ideal criterion.
FoldMap fold_map(std::size_t n, const CoefficientField& field, bool normalize = true);

}  // namespace euler
