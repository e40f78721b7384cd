#pragma once

#include <string>
#include <vector>

#include "euler/ideal.hpp"

namespace euler {

/// A point (a, b, s) of Q_2n over a presented ring: a.b^t = s(1 - s).
/// Construction only checks arities and rings; validate() checks the equation.
class QuadricPoint {
 public:
  QuadricPoint() = default;
  QuadricPoint(std::vector<RingElement> a, std::vector<RingElement> b, RingElement s);

  const RingPtr& ring() const { return s_.ring(); }
  std::size_t n() const { return a_.size(); }
  const std::vector<RingElement>& a() const { return a_; }
  const std::vector<RingElement>& b() const { return b_; }
  const RingElement& s() const { return s_; }

  /// a.b^t - s(1 - s); zero exactly when the point lies on the quadric.
  RingElement residual() const;

  bool operator==(const QuadricPoint& o) const;
  /// "([a1, ..], [b1, ..], s)"
  std::string to_string() const;

 private:
  std::vector<RingElement> a_;
  std::vector<RingElement> b_;
  RingElement s_;
};

/// Throws EquationViolated carrying the residual.
void validate(const QuadricPoint& v);
bool is_valid(const QuadricPoint& v);

/// I(v) = <a_1, .., a_n, s>.
Ideal vanishing_ideal(const QuadricPoint& v);

/// (0, .., 0, s = 1).
QuadricPoint base_point(const RingPtr& ring, std::size_t n);
/// (0, .., 0, s = 0).
QuadricPoint zero_point(const RingPtr& ring, std::size_t n);

/// A point of Q_2n over R[T], read as a naive homotopy between its
/// specializations at T = 0 and T = 1.
class Homotopy {
 public:
  Homotopy() = default;
  /// `point` must live in base->homotopy_extension().
  explicit Homotopy(QuadricPoint point);

  const QuadricPoint& point() const { return point_; }
  RingPtr base() const { return point_.ring()->homotopy_base(); }
  QuadricPoint at(const Coeff& t) const;
  QuadricPoint start() const { return at(Coeff(0)); }
  QuadricPoint end() const { return at(Coeff(1)); }

  /// Homotopy running backwards (T -> 1 - T).
  Homotopy reversed() const;

 private:
  QuadricPoint point_;
};

/// Validates the point over R[T] and both endpoints over R.
void validate(const Homotopy& h);
bool is_valid(const Homotopy& h);

/// The constant homotopy at v.
Homotopy constant_homotopy(const QuadricPoint& v);

/// (T(1-T), 0, ..; 1, 0, ..; T): from (0; e_1; 0) to the base point (0; e_1; 1).
Homotopy base_bridge(const RingPtr& ring, std::size_t n);

/// Coordinate ring of Q_2n: k[x1..xn, y1..yn, z] / (x.y^t - z(1 - z)).
RingPtr quadric_ring(std::size_t n, const CoefficientField& field);
/// The tautological point (x, y, z) of quadric_ring(n).
QuadricPoint identity_point(const RingPtr& quadric);

/// Explicit Jouanolou device for (Q_2n x Q_2n) minus (Z_n x Z_n). Variable
/// blocks, in order: x(n) y(n) z x'(n) y'(n) z' u(n) u_{n+1} v(n) v_{n+1}.
struct DevicePresentation {
  RingPtr ring;
  std::size_t n = 0;

  RingElement x(std::size_t i) const { return var(i); }
  RingElement y(std::size_t i) const { return var(n + i); }
  RingElement z() const { return var(2 * n); }
  RingElement xp(std::size_t i) const { return var(2 * n + 1 + i); }
  RingElement yp(std::size_t i) const { return var(3 * n + 1 + i); }
  RingElement zp() const { return var(4 * n + 1); }
  RingElement u(std::size_t i) const { return var(4 * n + 2 + i); }  // i = n gives u_{n+1}
  RingElement v(std::size_t i) const { return var(5 * n + 3 + i); }  // i = n gives v_{n+1}

  RingElement var(std::size_t index) const { return RingElement(ring, ring->poly().variable(index)); }
};

/// Throws UnsupportedN for n = 0 or when the device exceeds the variable limit.
DevicePresentation jouanolou_device(std::size_t n, const CoefficientField& field);

/// The sections i_l, i_r : Q_2n -> device (base point inserted in the right,
/// respectively left, factor), as ring maps device -> quadric ring.
RingMap left_section(const DevicePresentation& device, const RingPtr& quadric);
RingMap right_section(const DevicePresentation& device, const RingPtr& quadric);

/// Image of a point under a ring map, componentwise.
QuadricPoint map_point(const RingMap& f, const QuadricPoint& v);

}  // namespace euler
