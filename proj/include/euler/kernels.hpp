#pragma once

#include <span>
#include <vector>

#include "euler/polynomial.hpp"

namespace euler {

/// Normal forms of many polynomials against one fixed basis. The parallel
/// version splits the batch across OpenMP threads; the serial version is the
/// reference both are tested against.
std::vector<Polynomial> reduce_batch(const PolyRing& ring, std::span<const Polynomial> items,
                                     std::span<const Polynomial> basis);
std::vector<Polynomial> reduce_batch_serial(const PolyRing& ring, std::span<const Polynomial> items,
                                            std::span<const Polynomial> basis);

/// True iff every item reduces to zero.
bool all_reduce_to_zero(const PolyRing& ring, std::span<const Polynomial> items,
                        std::span<const Polynomial> basis);

}  // namespace euler
