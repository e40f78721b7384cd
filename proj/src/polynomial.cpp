#include "euler/polynomial.hpp"

#include <algorithm>
#include <map>

#include "euler/errors.hpp"

namespace euler {

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

PolyRing::PolyRing(CoefficientField field, std::vector<std::string> names, MonomialOrder order)
    : field_(std::move(field)), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars)
    throw Error(ErrorKind::TooManyVariables,
                std::to_string(names_.size()) + " variables exceed the limit of " +
                    std::to_string(kMaxVars));
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Polynomial PolyRing::constant(const Coeff& c) const {
  Coeff v = field_.from_rational(c);
  if (CoefficientField::is_zero(v)) return {};
  return Polynomial({Term{Monomial(), v}});
}

Polynomial PolyRing::variable(std::size_t i) const {
  return Polynomial({Term{Monomial::variable(i), Coeff(1)}});
}

Polynomial PolyRing::term(const Coeff& c, const Monomial& m) const {
  Coeff v = field_.from_rational(c);
  if (CoefficientField::is_zero(v)) return {};
  return Polynomial({Term{m, v}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = field_.from_rational(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, c);
      if (CoefficientField::is_zero(out.back().coeff)) out.pop_back();
    } else if (!CoefficientField::is_zero(c)) {
      out.push_back(Term{t.mono, std::move(c)});
    }
  }
  return Polynomial(std::move(out));
}

namespace {

template <class Combine>
std::vector<Term> merge(const MonomialOrder& order, const std::vector<Term>& a,
                        const std::vector<Term>& b, Combine&& combine_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term t;
  bool have = false;
  while (i < a.size() && (have || j < b.size())) {
    if (!have) {
      t = combine_b(b[j++]);
      have = true;
    }
    int c = order.compare(a[i].mono, t.mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(t));
      have = false;
    } else {
      combine_b.add_into(t.coeff, a[i].coeff);
      if (sgn(t.coeff) != 0) out.push_back(std::move(t));
      have = false;
      ++i;
    }
  }
  if (have) out.push_back(std::move(t));
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(combine_b(b[j]));
  return out;
}

struct Negate {
  const CoefficientField& f;
  Term operator()(const Term& t) const { return Term{t.mono, f.neg(t.coeff)}; }
  void add_into(Coeff& s, const Coeff& a) const { s = f.add(s, a); }
};

struct Identity {
  const CoefficientField& f;
  Term operator()(const Term& t) const { return t; }
  void add_into(Coeff& s, const Coeff& a) const { s = f.add(s, a); }
};

struct ScaledShift {
  const CoefficientField& f;
  Coeff c;  // already negated
  Monomial m;
  Term operator()(const Term& t) const { return Term{t.mono * m, f.mul(c, t.coeff)}; }
  void add_into(Coeff& s, const Coeff& a) const { s = f.add(s, a); }
};

}  // namespace

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  return Polynomial(merge(order_, a.terms_, b.terms_, Identity{field_}));
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  return Polynomial(merge(order_, a.terms_, b.terms_, Negate{field_}));
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms_) out.push_back(Term{t.mono, field_.neg(t.coeff)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::scale(const Polynomial& a, const Coeff& c) const {
  if (CoefficientField::is_zero(c)) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms_) out.push_back(Term{t.mono, field_.mul(t.coeff, c)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Coeff& c, const Monomial& m) const {
  if (CoefficientField::is_zero(c)) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms_) out.push_back(Term{t.mono * m, field_.mul(t.coeff, c)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub_mul_term(const Polynomial& a, const Coeff& c, const Monomial& m,
                                  const Polynomial& g) const {
  return Polynomial(merge(order_, a.terms_, g.terms_, ScaledShift{field_, field_.neg(c), m}));
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return mul_term(b, a.lead().coeff, a.lead().mono);
  if (b.size() == 1) return mul_term(a, b.lead().coeff, b.lead().mono);
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back(Term{s.mono * t.mono, field_.mul(s.coeff, t.coeff)});
  std::sort(prods.begin(), prods.end(),
            [&](const Term& x, const Term& y) { return order_.greater(x.mono, y.mono); });
  std::vector<Term> out;
  out.reserve(prods.size());
  for (auto& t : prods) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::pow(const Polynomial& a, unsigned e) const {
  Polynomial result = one();
  Polynomial base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero() || CoefficientField::is_one(a.lead().coeff)) return a;
  return scale(a, field_.inv(a.lead().coeff));
}

namespace {

// Sum of polynomials kept in buckets of geometrically growing capacity.
// Each bucket is sorted ascending so the leading term sits at the back.
class Geobucket {
 public:
  Geobucket(const MonomialOrder& order, const CoefficientField& field) : order_(order), field_(field) {}

  void add(std::vector<Term> ascending) {
    std::size_t i = 0;
    while (capacity(i) < ascending.size()) ++i;
    for (;;) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      ascending = merge_ascending(buckets_[i], ascending);
      buckets_[i].clear();
      if (ascending.size() <= capacity(i)) {
        buckets_[i] = std::move(ascending);
        return;
      }
      ++i;
    }
  }

  // Removes and returns the nonzero leading term; false when the sum is zero.
  bool pop_lead(Term& out) {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || order_.compare(buckets_[i].back().mono, buckets_[best].back().mono) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      out = std::move(buckets_[best].back());
      buckets_[best].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty() || !(buckets_[i].back().mono == out.mono)) continue;
        out.coeff = field_.add(out.coeff, buckets_[i].back().coeff);
        buckets_[i].pop_back();
      }
      if (!CoefficientField::is_zero(out.coeff)) return true;
    }
  }

 private:
  static std::size_t capacity(std::size_t i) { return std::size_t{8} << (2 * i); }

  std::vector<Term> merge_ascending(std::vector<Term>& a, std::vector<Term>& b) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = order_.compare(a[i].mono, b[j].mono);
      if (c < 0) {
        out.push_back(std::move(a[i++]));
      } else if (c > 0) {
        out.push_back(std::move(b[j++]));
      } else {
        Coeff s = field_.add(a[i].coeff, b[j].coeff);
        if (!CoefficientField::is_zero(s)) out.push_back(Term{a[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
  }

  const MonomialOrder& order_;
  const CoefficientField& field_;
  std::vector<std::vector<Term>> buckets_;
};

}  // namespace

Polynomial PolyRing::reduce(const Polynomial& p, std::span<const Polynomial> basis,
                            std::vector<Polynomial>* quotients) const {
  std::vector<std::vector<Term>> q;
  if (quotients) q.assign(basis.size(), {});
  std::vector<Term> rem;
  Geobucket bucket(order_, field_);
  bucket.add(std::vector<Term>(p.terms_.rbegin(), p.terms_.rend()));
  Term lt;
  while (bucket.pop_lead(lt)) {
    std::size_t hit = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].is_zero() && basis[i].lead_monomial().divides(lt.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      rem.push_back(std::move(lt));
      continue;
    }
    const Polynomial& g = basis[hit];
    Coeff c = field_.div(lt.coeff, g.lead().coeff);
    Monomial m = lt.mono / g.lead_monomial();
    Coeff neg = field_.neg(c);
    std::vector<Term> tail;
    tail.reserve(g.size() - 1);
    for (std::size_t k = g.size(); k-- > 1;)
      tail.push_back(Term{g.terms_[k].mono * m, field_.mul(neg, g.terms_[k].coeff)});
    if (!tail.empty()) bucket.add(std::move(tail));
    if (quotients) q[hit].push_back(Term{m, std::move(c)});
  }
  if (quotients) {
    quotients->clear();
    for (auto& terms : q) quotients->push_back(Polynomial(std::move(terms)));
  }
  return Polynomial(std::move(rem));
}

Polynomial PolyRing::reorder(const Polynomial& p) const { return from_terms(p.terms_); }

Polynomial PolyRing::remap(const Polynomial& p, std::span<const int> var_map) const {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms_) {
    Monomial m;
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] < 0) throw Error(ErrorKind::UnknownVariable, "variable has no image");
      m.set(static_cast<std::size_t>(var_map[i]), m[var_map[i]] + t.mono[i]);
    }
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial PolyRing::evaluate(const PolyRing& source, const Polynomial& p,
                              std::span<const Polynomial> images) const {
  if (images.size() != source.nvars())
    throw Error(ErrorKind::ArityMismatch, "substitution needs one image per variable");
  std::vector<std::map<unsigned, Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(e, pow(images[i], e)).first->second;
  };
  Polynomial result;
  for (const auto& t : p.terms()) {
    Polynomial acc = constant(t.coeff);
    for (std::size_t i = 0; i < source.nvars() && !acc.is_zero(); ++i) {
      if (t.mono[i] != 0) acc = mul(acc, power_of(i, t.mono[i]));
    }
    result = add(result, acc);
  }
  return result;
}

Polynomial PolyRing::from_expr(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Number: return constant(e.number);
    case Expr::Kind::Variable: {
      int i = index_of(e.name);
      if (i < 0) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + e.name + "'");
      return variable(static_cast<std::size_t>(i));
    }
    case Expr::Kind::Add: return add(from_expr(*e.args[0]), from_expr(*e.args[1]));
    case Expr::Kind::Sub: return sub(from_expr(*e.args[0]), from_expr(*e.args[1]));
    case Expr::Kind::Mul: return mul(from_expr(*e.args[0]), from_expr(*e.args[1]));
    case Expr::Kind::Neg: return neg(from_expr(*e.args[0]));
    case Expr::Kind::Pow: return pow(from_expr(*e.args[0]), e.exponent);
    case Expr::Kind::Div: {
      Polynomial den = from_expr(*e.args[1]);
      if (den.is_zero() || !den.is_constant())
        throw Error(ErrorKind::ParseError, "division only by nonzero constants");
      return scale(from_expr(*e.args[0]), field_.inv(den.lead().coeff));
    }
  }
  return {};
}

Polynomial PolyRing::parse(std::string_view text) const { return from_expr(*parse_expression(text)); }

std::string PolyRing::coeff_string(const Coeff& c) const { return c.get_str(); }

std::string PolyRing::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms_) {
    Coeff c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += to_string(t.mono);
    } else {
      out += c.get_str() + "*" + to_string(t.mono);
    }
  }
  return out;
}

}  // namespace euler
