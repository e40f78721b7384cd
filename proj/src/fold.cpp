#include "euler/fold.hpp"

#include "euler/errors.hpp"
#include "euler/segre.hpp"

namespace euler {

QuadricPoint FoldMap::restrict_left() const { return map_point(left_section(device, quadric), point()); }

QuadricPoint FoldMap::restrict_right() const { return map_point(right_section(device, quadric), point()); }

namespace {

// Quadric coordinates (x, y, z) sent to one factor of the device.
RingMap embed_factor(const DevicePresentation& D, const RingPtr& q, bool primed) {
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < D.n; ++i) images.push_back(primed ? D.xp(i) : D.x(i));
  for (std::size_t i = 0; i < D.n; ++i) images.push_back(primed ? D.yp(i) : D.y(i));
  images.push_back(primed ? D.zp() : D.z());
  return RingMap(q, D.ring, std::move(images));
}

struct Sections {
  const DevicePresentation& D;
  RingPtr q;
  RingMap left, right, unprimed, primed;
  Ideal x_ideal;  // <x_1..x_n> in the quadric ring

  Sections(const DevicePresentation& d, RingPtr quadric)
      : D(d),
        q(std::move(quadric)),
        left(left_section(d, q)),
        right(right_section(d, q)),
        unprimed(embed_factor(d, q, false)),
        primed(embed_factor(d, q, true)),
        x_ideal(Ideal(q, identity_point(q).a())) {}

  // Element of the device restricting to l along i_l and to r along i_r.
  RingElement interpolate(const RingElement& l, const RingElement& r) const {
    RingElement un = D.u(D.n);  // 0 on i_l, 1 on i_r
    return unprimed.apply(l) * (RingElement::one(D.ring) - un) + primed.apply(r) * un;
  }
};

// Adds c.h to w so that it restricts to `left` and `right`.
RingElement adjust_lift(const Sections& S, const std::vector<RingElement>& c, const RingElement& w,
                        const RingElement& left, const RingElement& right) {
  auto kl = S.x_ideal.express(S.left.apply(w) - left);
  auto kr = S.x_ideal.express(S.right.apply(w) - right);
  RingElement out = w;
  for (std::size_t i = 0; i < c.size(); ++i) out = out - c[i] * S.interpolate(kl[i], kr[i]);
  return out;
}

// d with c.d fixed; restrictions moved onto `left` / `right` by Koszul
// syzygies (c_2, -c_1).
std::vector<RingElement> adjust_vector(const Sections& S, const std::vector<RingElement>& c,
                                       std::vector<RingElement> d, const std::vector<RingElement>& left,
                                       const std::vector<RingElement>& right) {
  const std::size_t n = c.size();
  std::vector<RingElement> rl, rr;
  for (std::size_t i = 0; i < n; ++i) {
    rl.push_back(S.left.apply(d[i]) - left[i]);
    rr.push_back(S.right.apply(d[i]) - right[i]);
  }
  auto all_zero = [](const std::vector<RingElement>& v) {
    for (const auto& e : v)
      if (!e.is_zero()) return false;
    return true;
  };
  if (all_zero(rl) && all_zero(rr)) return d;
  if (n != 2) throw Error(ErrorKind::ConstructionFailed, "fold map restriction off by a non-Koszul syzygy");
  const auto& x = S.x_ideal.generators();
  auto koszul_coefficient = [&](const std::vector<RingElement>& r) {
    // r = t (x_2, -x_1)
    RingElement t = Ideal(S.q, {x[1]}).express(r[0])[0];
    if (!(r[1] == -(t * x[0]))) throw Error(ErrorKind::ConstructionFailed, "residual is not a Koszul syzygy");
    return t;
  };
  RingElement t = S.interpolate(koszul_coefficient(rl), koszul_coefficient(rr));
  d[0] = d[0] - t * c[1];
  d[1] = d[1] + t * c[0];
  return d;
}

}  // namespace

FoldMap fold_map(std::size_t n, const CoefficientField& field, bool normalize) {
  if (n == 0 || n > 2) throw Error(ErrorKind::UnsupportedN, "fold map is available for n = 1, 2");
  FoldMap F;
  F.device = jouanolou_device(n, field);
  F.quadric = quadric_ring(n, field);
  const DevicePresentation& D = F.device;
  const RingPtr& R = D.ring;

  RingElement ux = D.u(n) * D.z(), vx = D.v(n) * D.zp();
  for (std::size_t i = 0; i < n; ++i) {
    ux = ux + D.u(i) * D.x(i);
    vx = vx + D.v(i) * D.xp(i);
  }
  // ux + vx = 1 on the device, with ux in I and vx in I'.
  const RingElement ux2 = ux * ux, vx2 = vx * vx;
  for (std::size_t i = 0; i < n; ++i) {
    F.c_displayed.push_back(D.xp(i) * ux + D.x(i) * vx);
    F.c.push_back(vx2 * D.x(i) + ux2 * D.xp(i));
  }

  std::vector<RingElement> gi, gp;
  for (std::size_t i = 0; i < n; ++i) {
    gi.push_back(D.x(i));
    gp.push_back(D.xp(i));
  }
  gi.push_back(D.z());
  gp.push_back(D.zp());
  IdempotentLift lift = idempotent_lift(make_oriented(Ideal(R, gi), F.c));
  IdempotentLift lift_p = idempotent_lift(make_oriented(Ideal(R, gp), F.c));
  F.w = lift.s;
  F.w_prime = lift_p.s;
  F.d = lift.b;
  F.d_prime = lift_p.b;

  if (normalize) {
    Sections S(D, F.quadric);
    const QuadricPoint id = identity_point(F.quadric);
    const RingElement one = RingElement::one(F.quadric);
    const std::vector<RingElement> zeros(n, RingElement::zero(F.quadric));
    F.w = adjust_lift(S, F.c, F.w, id.s(), one);
    F.w_prime = adjust_lift(S, F.c, F.w_prime, one, id.s());
    const Ideal C(R, F.c);
    F.d = C.express(F.w * (RingElement::one(R) - F.w));
    F.d_prime = C.express(F.w_prime * (RingElement::one(R) - F.w_prime));
    F.d = adjust_vector(S, F.c, F.d, id.b(), zeros);
    F.d_prime = adjust_vector(S, F.c, F.d_prime, zeros, id.b());
  }

  const RingElement cdp = dot(F.c, F.d_prime);
  const RingElement w2 = F.w * F.w, wp2 = F.w_prime * F.w_prime;
  for (std::size_t i = 0; i < n; ++i) F.delta.push_back(cdp * F.d[i] + wp2 * F.d[i] + w2 * F.d_prime[i]);
  F.ww = F.w * F.w_prime;
  validate(F.point());
  return F;
}

}  // namespace euler
