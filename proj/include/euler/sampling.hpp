#pragma once

#include "euler/random.hpp"
#include "euler/ring.hpp"

namespace euler {

/// Random element with at most `terms` terms of total degree <= degree and
/// integer coefficients in [-bound, bound] (mapped into the field).
RingElement random_element(const RingPtr& ring, Rng& rng, unsigned degree, unsigned terms, long bound);

/// Same, but never zero: falls back to a nonzero constant.
RingElement random_nonzero_element(const RingPtr& ring, Rng& rng, unsigned degree, unsigned terms, long bound);

}  // namespace euler
