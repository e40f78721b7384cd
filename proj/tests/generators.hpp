#pragma once

#include "euler/random.hpp"
#include "euler/segre.hpp"
#include "helpers.hpp"

namespace testing_helpers {

using namespace euler;

inline RingElement random_constant(const RingPtr& r, Rng& rng, long bound) {
  return RingElement::constant(r, Coeff(rng.range(-bound, bound)));
}

// Random element of degree <= deg with small integer coefficients.
inline RingElement random_element(const RingPtr& r, Rng& rng, unsigned deg, int terms, long bound = 3) {
  const PolyRing& P = r->poly();
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned left = static_cast<unsigned>(rng.range(0, deg));
    for (std::size_t i = 0; i < P.nvars() && left > 0; ++i) {
      unsigned e = i + 1 == P.nvars() ? left : static_cast<unsigned>(rng.range(0, left));
      m.set(i, e);
      left -= e;
    }
    ts.push_back(Term{m, Coeff(rng.range(-bound, bound))});
  }
  return RingElement(r, P.from_terms(std::move(ts)));
}

// Height-2 ideal of k[x,y] with a pair of generators: a rational point
// <x - p, y - q> or two points on a horizontal line <(x - p)(x - p'), y - q>.
inline std::vector<RingElement> random_ci_generators(const RingPtr& r, Rng& rng) {
  RingElement x = RingElement::variable(r, "x"), y = RingElement::variable(r, "y");
  RingElement p = random_constant(r, rng, 4), q = random_constant(r, rng, 4);
  if (rng.range(0, 2) == 0) {
    RingElement p2 = p + RingElement::constant(r, Coeff(rng.range(1, 3)));
    return {(x - p) * (x - p2), y - q};
  }
  return {x - p, y - q};
}

// Orientation of <g> obtained from g by a unimodular constant matrix and an
// I^2 perturbation of degree bounded by `eps_deg`.
inline OrientedIdeal random_oriented(const RingPtr& r, Rng& rng, std::vector<RingElement> g, unsigned eps_deg = 1) {
  Ideal I(r, g);
  const std::size_t n = g.size();
  std::vector<RingElement> a = g;
  // A few elementary operations a_i += lambda a_j.
  for (int step = 0; step < 2; ++step) {
    std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
    if (i != j) a[i] = a[i] + a[j].scaled(Coeff(rng.range(-2, 2)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
    std::size_t k = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
    a[i] = a[i] + random_element(r, rng, eps_deg, 2, 2) * g[j] * g[k];
  }
  return make_oriented(I, a);
}

}  // namespace testing_helpers
