#include "euler/segre.hpp"

#include <algorithm>
#include <bit>

#include "euler/errors.hpp"
#include "euler/random.hpp"

namespace euler {

bool check_orientation(const Ideal& I, const std::vector<RingElement>& a) {
  for (const auto& x : a) require_same_ring(x.ring(), I.ring(), "orientation");
  if (!I.contains_all(a)) return false;
  Ideal generated = ideal_sum(Ideal(I.ring(), a), ideal_power(I, 2));
  return generated == I;
}

OrientedIdeal make_oriented(Ideal I, std::vector<RingElement> a) {
  if (a.empty()) throw Error(ErrorKind::ArityMismatch, "an orientation needs n >= 1 elements");
  if (!check_orientation(I, a))
    throw Error(ErrorKind::NotOriented, "the given elements do not generate " + I.to_string() + " modulo its square");
  return OrientedIdeal{std::move(I), std::move(a)};
}

RingElement determinant(const std::vector<std::vector<RingElement>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw Error(ErrorKind::ArityMismatch, "determinant of an empty matrix");
  if (k > 20) throw Error(ErrorKind::ArityMismatch, "matrix too large for expansion");
  const RingPtr& ring = m[0][0].ring();
  // partial[mask]: signed sum over assignments of rows 0..|mask|-1 to the
  // columns in mask.
  std::vector<RingElement> partial(std::size_t{1} << k, RingElement::zero(ring));
  partial[0] = RingElement::one(ring);
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (partial[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == k) continue;
    for (std::size_t col = 0; col < k; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      if (m[row][col].is_zero()) continue;
      // Sign of moving col past the already used columns above it.
      const int above = std::popcount(mask >> col);
      RingElement term = partial[mask] * m[row][col];
      std::size_t next = mask | (std::size_t{1} << col);
      partial[next] = above % 2 ? partial[next] - term : partial[next] + term;
    }
  }
  return partial.back();
}

IdempotentLift idempotent_lift(const OrientedIdeal& O, std::uint64_t seed) {
  const RingPtr& R = O.ring();
  if (!check_orientation(O.ideal, O.a))
    throw Error(ErrorKind::NotOriented, "idempotent_lift needs an orientation of " + O.ideal.to_string());
  const Ideal A(R, O.a);
  std::vector<RingElement> gens;
  for (const auto& g : O.ideal.groebner_elements())
    if (!A.contains(g)) gens.push_back(g);
  if (seed != 0) {
    Rng rng(seed);
    for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rng.range(0, i - 1)]);
  }

  RingElement s = RingElement::zero(R);
  if (!gens.empty()) {
    const std::size_t m = gens.size();
    // Products g_j g_l (j <= l) followed by the a_k.
    std::vector<RingElement> list;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = j; l < m; ++l) {
        list.push_back(gens[j] * gens[l]);
        pairs.emplace_back(j, l);
      }
    list.insert(list.end(), O.a.begin(), O.a.end());
    Ideal products(R, list);
    std::vector<std::vector<RingElement>> id_minus_m(m, std::vector<RingElement>(m, RingElement::zero(R)));
    for (std::size_t i = 0; i < m; ++i) {
      auto coeff = products.express(gens[i]);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (coeff[p].is_zero()) continue;
        auto [j, l] = pairs[p];
        id_minus_m[i][j] = id_minus_m[i][j] - coeff[p] * gens[l];
      }
      id_minus_m[i][i] = id_minus_m[i][i] + RingElement::one(R);
    }
    RingElement e = RingElement::one(R) - determinant(id_minus_m);
    s = A.reduce(e);
  }
  RingElement target = s * (RingElement::one(R) - s);
  std::vector<RingElement> b = A.express(target);
  // I = <a, s>: s in I, and every generator g = s g + (1 - s) g with the
  // second term in <a>.
  bool ok = dot(O.a, b) == target && O.ideal.contains(s);
  std::vector<RingElement> rest;
  for (const auto& g : O.ideal.generators()) rest.push_back((RingElement::one(R) - s) * g);
  ok = ok && A.contains_all(rest);
  if (!ok) throw Error(ErrorKind::ConstructionFailed, "idempotent lift failed its own verification");
  return IdempotentLift{s, std::move(b)};
}

QuadricPoint segre_class(const OrientedIdeal& O, std::uint64_t seed) {
  if (O.ideal.is_unit()) return base_point(O.ring(), O.n());
  IdempotentLift lift = idempotent_lift(O, seed);
  return QuadricPoint(O.a, std::move(lift.b), std::move(lift.s));
}

}  // namespace euler
