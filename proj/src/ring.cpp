#include "euler/ring.hpp"

#include <set>

#include "euler/errors.hpp"

namespace euler {

namespace {

MonomialOrder make_order(OrderKind kind, std::size_t n) {
  return kind == OrderKind::Lex ? MonomialOrder::lex(n) : MonomialOrder::degrevlex(n);
}

void check_distinct(const std::vector<std::string>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw Error(ErrorKind::DuplicateVariable, "variable '" + v + "' repeated");
}

}  // namespace

RingPtr PresentedRing::make(CoefficientField field, std::vector<std::string> variables,
                            const std::vector<std::string>& relations, OrderKind order) {
  std::vector<ExprPtr> exprs;
  exprs.reserve(relations.size());
  for (const auto& r : relations) exprs.push_back(parse_expression(r));
  return make(std::move(field), std::move(variables), exprs, order);
}

RingPtr PresentedRing::make(CoefficientField field, std::vector<std::string> variables,
                            const std::vector<ExprPtr>& relations, OrderKind order) {
  check_distinct(variables);
  std::size_t n = variables.size();
  PolyRing ambient(std::move(field), std::move(variables), make_order(order, n));
  std::vector<Polynomial> rels;
  rels.reserve(relations.size());
  for (const auto& e : relations) rels.push_back(ambient.from_expr(*e));
  return make(std::move(ambient), std::move(rels));
}

RingPtr PresentedRing::make(PolyRing ambient, std::vector<Polynomial> relations) {
  check_distinct(ambient.names());
  return std::make_shared<const PresentedRing>(Private{}, std::move(ambient), std::move(relations));
}

PresentedRing::PresentedRing(Private, PolyRing ambient, std::vector<Polynomial> relations)
    : ambient_(std::move(ambient)), relations_(std::move(relations)) {
  relation_basis_ = buchberger(ambient_, relations_).basis;
  dimension_ = staircase_dimension(relation_basis_, ambient_.nvars());
}

Polynomial PresentedRing::normal_form(const Polynomial& p) const {
  if (relation_basis_.empty()) return p;
  return ambient_.reduce(p, relation_basis_);
}

RingPtr PresentedRing::homotopy_extension() const {
  std::call_once(extension_once_, [this] {
    std::vector<std::string> names = ambient_.names();
    std::string t = "T";
    while (ambient_.index_of(t) >= 0) t += "'";
    names.push_back(t);
    const std::size_t n = names.size();
    MonomialOrder order = ambient_.order().kind() == OrderKind::Lex ? MonomialOrder::lex(n)
                                                                     : MonomialOrder::degrevlex(n);
    PolyRing ext(ambient_.field(), std::move(names), order);
    std::vector<Polynomial> rels;
    for (const auto& r : relations_) rels.push_back(ext.reorder(r));
    auto ring = std::make_shared<PresentedRing>(Private{}, std::move(ext), std::move(rels));
    ring->base_ = weak_from_this();
    extension_ = std::move(ring);
  });
  return extension_;
}

std::string PresentedRing::describe() const {
  std::string out = field().name() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) out += (i ? "," : "") + ambient_.names()[i];
  out += "]";
  if (!relations_.empty()) {
    out += " / (";
    for (std::size_t i = 0; i < relations_.size(); ++i)
      out += (i ? ", " : "") + ambient_.to_string(relations_[i]);
    out += ")";
  }
  return out;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!a || !b || a.get() != b.get())
    throw Error(ErrorKind::RingMismatch, std::string(where) + ": operands live in different rings");
}

RingElement::RingElement(RingPtr ring, const Polynomial& value)
    : ring_(std::move(ring)), value_(ring_->normal_form(value)) {}

RingElement RingElement::one(RingPtr ring) {
  Polynomial p = ring->poly().one();
  return RingElement(std::move(ring), p);
}

RingElement RingElement::constant(RingPtr ring, const Coeff& c) {
  Polynomial p = ring->poly().constant(c);
  return RingElement(std::move(ring), p);
}

RingElement RingElement::variable(RingPtr ring, std::string_view name) {
  int i = ring->poly().index_of(name);
  if (i < 0) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  Polynomial p = ring->poly().variable(static_cast<std::size_t>(i));
  return RingElement(std::move(ring), p);
}

RingElement RingElement::parse(RingPtr ring, std::string_view text) {
  Polynomial p = ring->poly().parse(text);
  return RingElement(std::move(ring), p);
}

bool RingElement::is_one() const { return value_ == ring_->poly().one(); }

RingElement RingElement::operator+(const RingElement& o) const {
  require_same_ring(ring_, o.ring_, "add");
  RingElement r;
  r.ring_ = ring_;
  r.value_ = ring_->poly().add(value_, o.value_);  // sum of normal forms is normal
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  require_same_ring(ring_, o.ring_, "sub");
  RingElement r;
  r.ring_ = ring_;
  r.value_ = ring_->poly().sub(value_, o.value_);
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r;
  r.ring_ = ring_;
  r.value_ = ring_->poly().neg(value_);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  require_same_ring(ring_, o.ring_, "mul");
  return RingElement(ring_, ring_->poly().mul(value_, o.value_));
}

RingElement RingElement::pow(unsigned e) const {
  RingElement result = one(ring_);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

RingElement RingElement::scaled(const Coeff& c) const {
  RingElement r;
  r.ring_ = ring_;
  r.value_ = ring_->poly().scale(value_, ring_->field().from_rational(c));
  return r;
}

bool RingElement::operator==(const RingElement& o) const {
  return ring_.get() == o.ring_.get() && value_ == o.value_;
}

std::string RingElement::to_string() const { return ring_ ? ring_->poly().to_string(value_) : "<null>"; }

RingElement dot(std::span<const RingElement> a, std::span<const RingElement> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "dot product of unequal lengths");
  if (a.empty()) throw Error(ErrorKind::ArityMismatch, "dot product of empty vectors");
  RingElement acc = RingElement::zero(a[0].ring());
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_->nvars())
    throw Error(ErrorKind::ArityMismatch, "ring map needs one image per source variable");
  for (const auto& im : images) {
    require_same_ring(im.ring(), target_, "ring map image");
    images_.push_back(im.value());
  }
}

RingElement RingMap::apply_polynomial(const Polynomial& p) const {
  return RingElement(target_, target_->poly().evaluate(source_->poly(), p, images_));
}

RingElement RingMap::apply(const RingElement& x) const {
  require_same_ring(x.ring(), source_, "ring map argument");
  return apply_polynomial(x.value());
}

bool RingMap::well_defined() const {
  for (const auto& r : source_->relations())
    if (!apply_polynomial(r).is_zero()) return false;
  return true;
}

RingElement substitute(const RingElement& p, const RingElement& value) {
  RingPtr base = p.ring()->homotopy_base();
  if (!base)
    throw Error(ErrorKind::UnknownVariable, "element does not live in a homotopy extension R[T]");
  require_same_ring(value.ring(), base, "substitute");
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < base->nvars(); ++i)
    images.push_back(RingElement(base, base->poly().variable(i)));
  images.push_back(value);
  return RingMap(p.ring(), base, std::move(images)).apply(p);
}

RingElement substitute(const RingElement& p, const Coeff& c) {
  RingPtr base = p.ring()->homotopy_base();
  if (!base)
    throw Error(ErrorKind::UnknownVariable, "element does not live in a homotopy extension R[T]");
  return substitute(p, RingElement::constant(base, c));
}

RingElement lift_to_homotopy(const RingElement& p) {
  RingPtr ext = p.ring()->homotopy_extension();
  std::vector<int> map(p.ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  return RingElement(ext, ext->poly().remap(p.value(), map));
}

RingElement homotopy_parameter(const RingPtr& base) {
  RingPtr ext = base->homotopy_extension();
  return RingElement(ext, ext->poly().variable(base->nvars()));
}

}  // namespace euler
