#include "euler/quadric.hpp"

#include "euler/errors.hpp"

namespace euler {

QuadricPoint::QuadricPoint(std::vector<RingElement> a, std::vector<RingElement> b, RingElement s)
    : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {
  if (a_.empty() || a_.size() != b_.size())
    throw Error(ErrorKind::ArityMismatch, "a point of Q_2n needs n >= 1 entries in both a and b");
  for (const auto& e : a_) require_same_ring(e.ring(), s_.ring(), "quadric point");
  for (const auto& e : b_) require_same_ring(e.ring(), s_.ring(), "quadric point");
}

RingElement QuadricPoint::residual() const {
  return dot(a_, b_) - s_ * (RingElement::one(ring()) - s_);
}

bool QuadricPoint::operator==(const QuadricPoint& o) const {
  return a_ == o.a_ && b_ == o.b_ && s_ == o.s_;
}

std::string QuadricPoint::to_string() const {
  auto list = [](const std::vector<RingElement>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
    return out + "]";
  };
  return "(" + list(a_) + ", " + list(b_) + ", " + s_.to_string() + ")";
}

void validate(const QuadricPoint& v) {
  RingElement r = v.residual();
  if (!r.is_zero())
    throw Error(ErrorKind::EquationViolated, "a.b^t - s(1-s) = " + r.to_string() + " for " + v.to_string());
}

bool is_valid(const QuadricPoint& v) { return v.residual().is_zero(); }

Ideal vanishing_ideal(const QuadricPoint& v) {
  std::vector<RingElement> gens = v.a();
  gens.push_back(v.s());
  return Ideal(v.ring(), std::move(gens));
}

QuadricPoint base_point(const RingPtr& ring, std::size_t n) {
  std::vector<RingElement> zeros(n, RingElement::zero(ring));
  return QuadricPoint(zeros, zeros, RingElement::one(ring));
}

QuadricPoint zero_point(const RingPtr& ring, std::size_t n) {
  std::vector<RingElement> zeros(n, RingElement::zero(ring));
  return QuadricPoint(zeros, zeros, RingElement::zero(ring));
}

Homotopy::Homotopy(QuadricPoint point) : point_(std::move(point)) {
  if (!point_.ring()->homotopy_base())
    throw Error(ErrorKind::UnknownVariable, "homotopy must live over a ring R[T]");
}

QuadricPoint Homotopy::at(const Coeff& t) const {
  std::vector<RingElement> a, b;
  for (const auto& e : point_.a()) a.push_back(substitute(e, t));
  for (const auto& e : point_.b()) b.push_back(substitute(e, t));
  return QuadricPoint(std::move(a), std::move(b), substitute(point_.s(), t));
}

Homotopy Homotopy::reversed() const {
  const RingPtr& ext = point_.ring();
  RingPtr base = ext->homotopy_base();
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < base->nvars(); ++i) images.emplace_back(ext, ext->poly().variable(i));
  images.push_back(RingElement::one(ext) - homotopy_parameter(base));
  return Homotopy(map_point(RingMap(ext, ext, std::move(images)), point_));
}

void validate(const Homotopy& h) {
  validate(h.point());
  validate(h.start());
  validate(h.end());
}

bool is_valid(const Homotopy& h) { return is_valid(h.point()) && is_valid(h.start()) && is_valid(h.end()); }

namespace {

std::vector<RingElement> lift_all(const std::vector<RingElement>& xs) {
  std::vector<RingElement> out;
  for (const auto& x : xs) out.push_back(lift_to_homotopy(x));
  return out;
}

}  // namespace

Homotopy constant_homotopy(const QuadricPoint& v) {
  return Homotopy(QuadricPoint(lift_all(v.a()), lift_all(v.b()), lift_to_homotopy(v.s())));
}

Homotopy base_bridge(const RingPtr& ring, std::size_t n) {
  RingPtr ext = ring->homotopy_extension();
  RingElement t = homotopy_parameter(ring);
  std::vector<RingElement> a(n, RingElement::zero(ext)), b(n, RingElement::zero(ext));
  a[0] = t * (RingElement::one(ext) - t);
  b[0] = RingElement::one(ext);
  return Homotopy(QuadricPoint(std::move(a), std::move(b), t));
}

RingPtr quadric_ring(std::size_t n, const CoefficientField& field) {
  if (n == 0) throw Error(ErrorKind::UnsupportedN, "n must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  PolyRing P(field, names, MonomialOrder::degrevlex(names.size()));
  Polynomial rel = P.neg(P.mul(P.variable(2 * n), P.sub(P.one(), P.variable(2 * n))));
  for (std::size_t i = 0; i < n; ++i) rel = P.add(rel, P.mul(P.variable(i), P.variable(n + i)));
  return PresentedRing::make(std::move(P), {rel});
}

QuadricPoint identity_point(const RingPtr& quadric) {
  std::size_t n = (quadric->nvars() - 1) / 2;
  std::vector<RingElement> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.emplace_back(quadric, quadric->poly().variable(i));
    b.emplace_back(quadric, quadric->poly().variable(n + i));
  }
  return QuadricPoint(std::move(a), std::move(b), RingElement(quadric, quadric->poly().variable(2 * n)));
}

DevicePresentation jouanolou_device(std::size_t n, const CoefficientField& field) {
  if (n == 0) throw Error(ErrorKind::UnsupportedN, "n must be positive");
  if (6 * n + 4 > kMaxVars) throw Error(ErrorKind::UnsupportedN, "device too large for n = " + std::to_string(n));
  std::vector<std::string> names;
  auto block = [&](const std::string& stem, const std::string& mark, std::size_t count) {
    for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i) + mark);
  };
  block("x", "", n);
  block("y", "", n);
  names.push_back("z");
  block("x", "'", n);
  block("y", "'", n);
  names.push_back("z'");
  block("u", "", n + 1);
  block("v", "", n + 1);
  PolyRing P(field, names, MonomialOrder::degrevlex(names.size()));
  auto var = [&](std::size_t i) { return P.variable(i); };
  const std::size_t z = 2 * n, zp = 4 * n + 1, u0 = 4 * n + 2, v0 = 5 * n + 3;
  Polynomial r1 = P.neg(P.mul(var(z), P.sub(P.one(), var(z))));
  Polynomial r2 = P.neg(P.mul(var(zp), P.sub(P.one(), var(zp))));
  Polynomial r3 = P.add(P.mul(var(u0 + n), var(z)), P.mul(var(v0 + n), var(zp)));
  r3 = P.sub(r3, P.one());
  for (std::size_t i = 0; i < n; ++i) {
    r1 = P.add(r1, P.mul(var(i), var(n + i)));
    r2 = P.add(r2, P.mul(var(2 * n + 1 + i), var(3 * n + 1 + i)));
    r3 = P.add(r3, P.add(P.mul(var(u0 + i), var(i)), P.mul(var(v0 + i), var(2 * n + 1 + i))));
  }
  return DevicePresentation{PresentedRing::make(std::move(P), {r1, r2, r3}), n};
}

namespace {

// Images of the device variables when one factor is the identity and the
// other is the base point.
RingMap section(const DevicePresentation& d, const RingPtr& q, bool identity_on_left) {
  const std::size_t n = d.n;
  if (q->nvars() != 2 * n + 1) throw Error(ErrorKind::ArityMismatch, "quadric ring has the wrong size");
  auto zero = RingElement::zero(q);
  auto one = RingElement::one(q);
  auto qv = [&](std::size_t i) { return RingElement(q, q->poly().variable(i)); };
  std::vector<RingElement> factor, base;
  for (std::size_t i = 0; i < 2 * n + 1; ++i) factor.push_back(qv(i));
  for (std::size_t i = 0; i < 2 * n; ++i) base.push_back(zero);
  base.push_back(one);
  std::vector<RingElement> images = identity_on_left ? factor : base;
  const auto& second = identity_on_left ? base : factor;
  images.insert(images.end(), second.begin(), second.end());
  // u-block then v-block: the base factor's z (= 1) carries the unit.
  for (std::size_t i = 0; i < n; ++i) images.push_back(zero);
  images.push_back(identity_on_left ? zero : one);
  for (std::size_t i = 0; i < n; ++i) images.push_back(zero);
  images.push_back(identity_on_left ? one : zero);
  return RingMap(d.ring, q, std::move(images));
}

}  // namespace

RingMap left_section(const DevicePresentation& device, const RingPtr& quadric) {
  return section(device, quadric, true);
}

RingMap right_section(const DevicePresentation& device, const RingPtr& quadric) {
  return section(device, quadric, false);
}

QuadricPoint map_point(const RingMap& f, const QuadricPoint& v) {
  std::vector<RingElement> a, b;
  for (const auto& e : v.a()) a.push_back(f.apply(e));
  for (const auto& e : v.b()) b.push_back(f.apply(e));
  return QuadricPoint(std::move(a), std::move(b), f.apply(v.s()));
}

}  // namespace euler
