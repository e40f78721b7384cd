#include "euler/sampling.hpp"

namespace euler {

RingElement random_element(const RingPtr& ring, Rng& rng, unsigned degree, unsigned terms, long bound) {
  const PolyRing& P = ring->poly();
  std::vector<Term> ts;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    auto left = static_cast<unsigned>(rng.range(0, degree));
    for (std::size_t i = 0; i < P.nvars() && left > 0; ++i) {
      auto e = i + 1 == P.nvars() ? left : static_cast<unsigned>(rng.range(0, left));
      m.set(i, e);
      left -= e;
    }
    ts.push_back(Term{m, Coeff(rng.range(-bound, bound))});
  }
  return RingElement(ring, P.from_terms(std::move(ts)));
}

RingElement random_nonzero_element(const RingPtr& ring, Rng& rng, unsigned degree, unsigned terms, long bound) {
  RingElement e = random_element(ring, rng, degree, terms, bound);
  if (!e.is_zero()) return e;
  RingElement c = RingElement::constant(ring, Coeff(rng.nonzero(bound < 1 ? 1 : bound)));
  return c.is_zero() ? RingElement::one(ring) : c;
}

}  // namespace euler
