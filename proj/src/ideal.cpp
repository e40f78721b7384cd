#include "euler/ideal.hpp"

#include <map>
#include <mutex>

#include "euler/errors.hpp"
#include "euler/kernels.hpp"

namespace euler {

struct Ideal::Cache {
  std::mutex mu;
  std::optional<std::vector<Polynomial>> basis;
  std::map<std::string, std::vector<Polynomial>> by_order;
  // Tracked basis over generators ++ relations of the ring.
  std::optional<GroebnerResult> tracked;
};

Ideal::Ideal(RingPtr ring, std::vector<RingElement> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators) require_same_ring(g.ring(), ring_, "ideal generator");
  gens_ = std::make_shared<const std::vector<RingElement>>(std::move(generators));
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<RingElement> gens;
  for (const auto& g : generators) gens.push_back(RingElement::parse(ring, g));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::unit(RingPtr ring) {
  RingElement one = RingElement::one(ring);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

namespace {

std::vector<Polynomial> with_relations(const RingPtr& ring, const std::vector<RingElement>& gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size() + ring->relation_basis().size());
  for (const auto& g : gens) polys.push_back(g.value());
  for (const auto& r : ring->relation_basis()) polys.push_back(r);
  return polys;
}

}  // namespace

const std::vector<Polynomial>& Ideal::basis() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->basis) {
    bool only_relations = true;
    for (const auto& g : *gens_) only_relations = only_relations && g.is_zero();
    cache_->basis = only_relations ? ring_->relation_basis()
                                   : buchberger(ring_->poly(), with_relations(ring_, *gens_)).basis;
  }
  return *cache_->basis;
}

std::vector<Polynomial> Ideal::groebner_basis(const MonomialOrder& order) const {
  if (order == ring_->poly().order()) return basis();
  std::lock_guard lock(cache_->mu);
  std::string key = order.name();
  auto it = cache_->by_order.find(key);
  if (it != cache_->by_order.end()) return it->second;
  PolyRing other(ring_->field(), ring_->variables(), order);
  std::vector<Polynomial> polys;
  for (const auto& p : with_relations(ring_, *gens_)) polys.push_back(other.reorder(p));
  auto basis = buchberger(other, polys).basis;
  cache_->by_order.emplace(key, basis);
  return basis;
}

std::vector<RingElement> Ideal::groebner_elements() const {
  std::vector<RingElement> out;
  for (const auto& p : basis()) {
    RingElement e(ring_, p);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

bool Ideal::contains(const RingElement& f) const {
  require_same_ring(f.ring(), ring_, "contains");
  return ring_->poly().reduce(f.value(), basis()).is_zero();
}

bool Ideal::contains_all(const std::vector<RingElement>& fs) const {
  std::vector<Polynomial> items;
  items.reserve(fs.size());
  for (const auto& f : fs) {
    require_same_ring(f.ring(), ring_, "contains");
    items.push_back(f.value());
  }
  return all_reduce_to_zero(ring_->poly(), items, basis());
}

RingElement Ideal::reduce(const RingElement& f) const {
  require_same_ring(f.ring(), ring_, "reduce");
  return RingElement(ring_, ring_->poly().reduce(f.value(), basis()));
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::is_zero() const { return basis() == ring_->relation_basis(); }

bool Ideal::subset_of(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "subset_of");
  return other.contains_all(*gens_);
}

bool Ideal::operator==(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal equality");
  return basis() == other.basis();
}

std::vector<RingElement> Ideal::express(const RingElement& f) const {
  require_same_ring(f.ring(), ring_, "express");
  const PolyRing& P = ring_->poly();
  const GroebnerResult* gb = nullptr;
  {
    std::lock_guard lock(cache_->mu);
    if (!cache_->tracked) cache_->tracked = buchberger(P, with_relations(ring_, *gens_), true);
    gb = &*cache_->tracked;
  }
  std::vector<Polynomial> coeffs;
  const std::size_t total = gens_->size() + ring_->relation_basis().size();
  Polynomial rem = express_with(P, *gb, total, f.value(), coeffs);
  if (!rem.is_zero()) throw Error(ErrorKind::NotMember, "element " + f.to_string() + " is not in " + to_string());
  std::vector<RingElement> out;
  out.reserve(gens_->size());
  for (std::size_t i = 0; i < gens_->size(); ++i) out.emplace_back(ring_, coeffs[i]);
  // The relation cofactors vanish in R; re-verify the identity there.
  RingElement check = RingElement::zero(ring_);
  for (std::size_t i = 0; i < out.size(); ++i) check = check + out[i] * (*gens_)[i];
  if (!(check == f)) throw Error(ErrorKind::ConstructionFailed, "express produced a wrong certificate");
  return out;
}

DimensionHeight Ideal::dimension_height() const {
  int d = staircase_dimension(basis(), ring_->nvars());
  if (d < 0) return {DimensionHeight::kEmpty, DimensionHeight::kInfinite};
  return {d, ring_->dimension() - d};
}

long Ideal::vector_space_dimension() const {
  long c = staircase_count(basis(), ring_->nvars());
  if (c < 0) throw Error(ErrorKind::NotZeroDimensional, to_string() + " is not zero-dimensional");
  return c;
}

std::string Ideal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_->size(); ++i) out += (i ? ", " : "") + (*gens_)[i].to_string();
  return out + ">";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<RingElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  // Reduced bases keep the products (and their coefficients) small.
  const std::vector<RingElement> ga = a.groebner_elements(), gb = b.groebner_elements();
  std::vector<RingElement> gens;
  for (const auto& g : ga)
    for (const auto& h : gb) {
      RingElement p = g * h;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  if (k == 0) return Ideal::unit(a.ring());
  // Products g_{i1} ... g_{ik} with i1 <= ... <= ik.
  const std::vector<RingElement> base = a.groebner_elements();
  std::vector<std::pair<RingElement, std::size_t>> layer;
  for (std::size_t i = 0; i < base.size(); ++i) layer.emplace_back(base[i], i);
  for (unsigned step = 1; step < k; ++step) {
    std::vector<std::pair<RingElement, std::size_t>> next;
    for (const auto& [p, last] : layer)
      for (std::size_t i = last; i < base.size(); ++i) next.emplace_back(p * base[i], i);
    layer = std::move(next);
  }
  std::vector<RingElement> gens;
  for (auto& [p, last] : layer)
    if (!p.is_zero()) gens.push_back(std::move(p));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal intersection");
  const RingPtr& R = a.ring();
  const PolyRing& P = R->poly();
  const std::size_t n = P.nvars();
  if (n + 1 > kMaxVars) throw Error(ErrorKind::TooManyVariables, "no room for an elimination variable");
  std::vector<std::string> names{"t"};
  for (const auto& v : P.names()) names.push_back(v);
  PolyRing E(P.field(), names, MonomialOrder::block(n + 1, 1));
  std::vector<int> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<int>(i + 1);
  const Polynomial t = E.variable(0);
  const Polynomial one_minus_t = E.sub(E.one(), t);
  std::vector<Polynomial> gens;
  for (const auto& g : with_relations(R, a.generators())) gens.push_back(E.mul(t, E.remap(g, shift)));
  for (const auto& g : with_relations(R, b.generators()))
    gens.push_back(E.mul(one_minus_t, E.remap(g, shift)));
  std::vector<int> back(n + 1, -1);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = static_cast<int>(i);
  std::vector<RingElement> out;
  for (const auto& g : buchberger(E, gens).basis) {
    if (g.lead_monomial()[0] != 0) continue;  // elimination order: t-free iff LM t-free
    RingElement r(R, P.remap(g, back));
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return Ideal(R, std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const RingElement& g) {
  require_same_ring(a.ring(), g.ring(), "ideal quotient");
  const RingPtr& R = a.ring();
  if (g.is_zero()) return Ideal::unit(R);
  const PolyRing& P = R->poly();
  // In the ambient ring: (Q + I) : g = ((Q + I) ∩ <g>) / g.
  auto ambient = PresentedRing::make(P, {});
  std::vector<RingElement> lhs, rhs{RingElement(ambient, g.value())};
  for (const auto& p : with_relations(R, a.generators())) lhs.emplace_back(ambient, p);
  Ideal meet = ideal_intersection(Ideal(ambient, lhs), Ideal(ambient, rhs));
  std::vector<Polynomial> divisor{g.value()};
  std::vector<RingElement> out;
  for (const auto& h : meet.generators()) {
    std::vector<Polynomial> q;
    Polynomial rem = P.reduce(h.value(), divisor, &q);
    if (!rem.is_zero()) throw Error(ErrorKind::ConstructionFailed, "inexact division in ideal quotient");
    RingElement r(R, q[0]);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return Ideal(R, std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal quotient");
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    if (g.is_zero()) continue;
    Ideal q = ideal_quotient(a, g);
    acc = acc ? ideal_intersection(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(a.ring());
}

std::optional<ComaximalityWitness> comaximal_witness(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "comaximal_witness");
  Ideal s = ideal_sum(a, b);
  if (!s.is_unit()) return std::nullopt;
  const RingPtr& R = a.ring();
  auto coeffs = s.express(RingElement::one(R));
  RingElement e = RingElement::zero(R);
  for (std::size_t i = 0; i < a.size(); ++i) e = e + coeffs[i] * a.generators()[i];
  return ComaximalityWitness{e, RingElement::one(R) - e};
}

}  // namespace euler
