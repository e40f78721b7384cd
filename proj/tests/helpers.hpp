#pragma once

#include <string>
#include <vector>

#include "euler/ideal.hpp"
#include "euler/quadric.hpp"

namespace testing_helpers {

using namespace euler;

inline RingPtr free_ring(std::vector<std::string> vars, CoefficientField field = CoefficientField::rationals(),
                         OrderKind order = OrderKind::DegRevLex) {
  return PresentedRing::make(std::move(field), std::move(vars), std::vector<std::string>{}, order);
}

inline RingElement el(const RingPtr& r, const std::string& text) { return RingElement::parse(r, text); }

inline std::vector<RingElement> els(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<RingElement> out;
  for (const auto& t : texts) out.push_back(el(r, t));
  return out;
}

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal::parse(r, gens); }

inline QuadricPoint point(const RingPtr& r, const std::vector<std::string>& a, const std::vector<std::string>& b,
                          const std::string& s) {
  return QuadricPoint(els(r, a), els(r, b), el(r, s));
}

}  // namespace testing_helpers
