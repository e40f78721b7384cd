#include "euler/kernels.hpp"

#include <atomic>

namespace euler {

std::vector<Polynomial> reduce_batch_serial(const PolyRing& ring, std::span<const Polynomial> items,
                                            std::span<const Polynomial> basis) {
  std::vector<Polynomial> out;
  out.reserve(items.size());
  for (const auto& p : items) out.push_back(ring.reduce(p, basis));
  return out;
}

std::vector<Polynomial> reduce_batch(const PolyRing& ring, std::span<const Polynomial> items,
                                     std::span<const Polynomial> basis) {
  std::vector<Polynomial> out(items.size());
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
  for (long i = 0; i < n; ++i) out[i] = ring.reduce(items[i], basis);
  return out;
}

bool all_reduce_to_zero(const PolyRing& ring, std::span<const Polynomial> items,
                        std::span<const Polynomial> basis) {
  std::atomic<bool> ok{true};
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
  for (long i = 0; i < n; ++i) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!ring.reduce(items[i], basis).is_zero()) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

}  // namespace euler
