#include "euler/euler.hpp"

#include <algorithm>

#include "euler/errors.hpp"
#include "euler/sampling.hpp"

namespace euler {

namespace {

std::string list_string(const std::vector<RingElement>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out + "]";
}

// Generators of I replaced by its reduced Groebner basis, for stable output.
Ideal tidy(const Ideal& I) {
  if (I.is_unit()) return Ideal::unit(I.ring());
  return Ideal(I.ring(), I.groebner_elements());
}

std::vector<RingElement> reduce_all(const Ideal& modulus, const std::vector<RingElement>& xs) {
  std::vector<RingElement> out;
  for (const auto& x : xs) out.push_back(modulus.reduce(x));
  return out;
}

QuadricPoint symbol_point(const EulerSymbol& S) {
  if (S.is_zero()) return base_point(S.ring(), S.n);
  return segre_class(S.oriented());
}

}  // namespace

EulerSymbol EulerSymbol::make(Ideal I, std::vector<RingElement> a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::ArityMismatch, "an Euler symbol needs n >= 1");
  if (I.is_unit()) return zero(I.ring(), n);
  DimensionHeight dh = I.dimension_height();
  if (dh.height != static_cast<int>(n))
    throw Error(ErrorKind::HeightViolation,
                "ht " + I.to_string() + " = " + std::to_string(dh.height) + ", expected " + std::to_string(n));
  OrientedIdeal O = make_oriented(std::move(I), std::move(a));
  return EulerSymbol{std::move(O.ideal), std::move(O.a), n};
}

EulerSymbol EulerSymbol::zero(const RingPtr& ring, std::size_t n) { return EulerSymbol{Ideal::unit(ring), {}, n}; }

std::string EulerSymbol::to_string() const {
  if (is_zero()) return "0";
  return "(" + ideal.to_string() + ", " + list_string(a) + ")";
}

EulerSum& EulerSum::add(long coeff, EulerSymbol symbol) {
  require_same_ring(symbol.ring(), ring, "Euler sum");
  if (symbol.n != n) throw Error(ErrorKind::ArityMismatch, "Euler sum mixes different n");
  terms.emplace_back(coeff, std::move(symbol));
  return *this;
}

std::string EulerSum::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    long c = terms[i].first;
    if (i > 0) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    long m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m) + "*";
    out += terms[i].second.to_string();
  }
  return out;
}

UnimodularRow UnimodularRow::make(std::vector<RingElement> entries) {
  if (entries.empty()) throw Error(ErrorKind::ArityMismatch, "empty row");
  const RingPtr& R = entries[0].ring();
  for (const auto& e : entries) require_same_ring(e.ring(), R, "unimodular row");
  if (!Ideal(R, entries).is_unit())
    throw Error(ErrorKind::Unimodularity, "row " + list_string(entries) + " does not generate the unit ideal");
  return UnimodularRow{std::move(entries)};
}

std::string UnimodularRow::to_string() const { return list_string(entries); }

namespace {

void check_factor(const ElementaryFactor& f, std::size_t n) {
  if (f.i == f.j) throw Error(ErrorKind::ArityMismatch, "elementary factor needs i != j");
  if (f.i >= n || f.j >= n) throw Error(ErrorKind::ArityMismatch, "elementary factor index out of range");
}

}  // namespace

std::vector<RingElement> apply_factor(const ElementaryFactor& f, std::vector<RingElement> a) {
  check_factor(f, a.size());
  a[f.i] = a[f.i] + f.lambda * a[f.j];
  return a;
}

std::vector<RingElement> apply_inverse_transpose(const ElementaryFactor& f, std::vector<RingElement> b) {
  check_factor(f, b.size());
  b[f.j] = b[f.j] - f.lambda * b[f.i];
  return b;
}

RelationWitness lift_witness(const EulerSymbol& S) {
  if (S.is_zero() || !(Ideal(S.ring(), S.a) == S.ideal))
    throw Error(ErrorKind::NotCompleteIntersection, S.to_string() + " is not generated by its orientation");
  const RingPtr& R = S.ring();
  RingPtr ext = R->homotopy_extension();
  RingElement T = homotopy_parameter(R);
  std::vector<RingElement> at, zeros(S.n, RingElement::zero(ext));
  for (const auto& x : S.a) at.push_back(T * lift_to_homotopy(x));
  Homotopy h(QuadricPoint(at, zeros, RingElement::zero(ext)));
  validate(h);
  return RelationWitness{h.start(), h.end(), h};
}

RelationWitness elementary_witness(const EulerSymbol& S, const ElementaryFactor& f) {
  check_factor(f, S.n);
  require_same_ring(f.lambda.ring(), S.ring(), "elementary factor");
  QuadricPoint v = symbol_point(S);
  RingElement T = homotopy_parameter(S.ring());
  ElementaryFactor ft{f.i, f.j, T * lift_to_homotopy(f.lambda)};
  std::vector<RingElement> a, b;
  for (const auto& x : v.a()) a.push_back(lift_to_homotopy(x));
  for (const auto& x : v.b()) b.push_back(lift_to_homotopy(x));
  Homotopy h(QuadricPoint(apply_factor(ft, a), apply_inverse_transpose(ft, b), lift_to_homotopy(v.s())));
  validate(h);
  return RelationWitness{h.start(), h.end(), h};
}

EulerSymbol act(const EulerSymbol& S, const ElementaryWord& w) {
  if (S.is_zero()) return S;
  std::vector<RingElement> a = S.a;
  for (const auto& f : w.factors) a = apply_factor(f, std::move(a));
  return EulerSymbol{S.ideal, std::move(a), S.n};
}

EulerSymbol merge(const EulerSymbol& J, const EulerSymbol& K) {
  require_same_ring(J.ring(), K.ring(), "merge");
  if (J.n != K.n) throw Error(ErrorKind::ArityMismatch, "merge of symbols with different n");
  if (J.is_zero()) return K;
  if (K.is_zero()) return J;
  auto w = comaximal_witness(J.ideal, K.ideal);
  if (!w) throw Error(ErrorKind::NotComaximal, J.ideal.to_string() + " + " + K.ideal.to_string() + " is proper");
  const RingElement eJ2 = w->e * w->e;
  const RingElement eK2 = w->e_prime * w->e_prime;
  Ideal I = tidy(ideal_product(J.ideal, K.ideal));
  std::vector<RingElement> reps;
  for (std::size_t i = 0; i < J.n; ++i) reps.push_back(eK2 * J.a[i] + eJ2 * K.a[i]);
  return EulerSymbol::make(I, reduce_all(ideal_power(I, 2), reps));
}

std::pair<EulerSymbol, EulerSymbol> split(const EulerSymbol& I, const Ideal& J, const Ideal& K) {
  require_same_ring(J.ring(), I.ring(), "split");
  require_same_ring(K.ring(), I.ring(), "split");
  if (!ideal_sum(J, K).is_unit()) throw Error(ErrorKind::NotComaximal, J.to_string() + " + " + K.to_string() + " is proper");
  if (!(ideal_product(J, K) == I.ideal))
    throw Error(ErrorKind::NotMember, J.to_string() + " * " + K.to_string() + " is not " + I.ideal.to_string());
  auto induced = [&](const Ideal& F) {
    if (F.is_unit()) return EulerSymbol::zero(I.ring(), I.n);
    return EulerSymbol::make(F, reduce_all(ideal_power(F, 2), I.a));
  };
  return {induced(J), induced(K)};
}

MovingEulerResult moving_euler(const OrientedIdeal& O, const std::vector<Ideal>& avoid, std::uint64_t seed,
                               unsigned attempt_cap, unsigned degree_cap) {
  const Ideal& I = O.ideal;
  const RingPtr& R = O.ring();
  const std::size_t n = O.n();
  for (const auto& J : avoid) require_same_ring(J.ring(), R, "moving_euler avoid ideal");
  DimensionHeight dh = I.dimension_height();
  if (dh.height != static_cast<int>(n))
    throw Error(ErrorKind::HeightViolation,
                "moving_euler needs ht I = " + std::to_string(n) + ", got " + std::to_string(dh.height));
  const Ideal I2 = ideal_power(I, 2);
  // Normal forms modulo I^2 keep deg f, and with it the colength of K, small.
  const std::vector<RingElement> a = reduce_all(I2, O.a);
  Rng rng(seed);
  const unsigned attempts = std::max(1u, attempt_cap);
  const unsigned block = std::max(1u, attempts / (degree_cap + 1));
  std::string last = "no candidate tried";
  for (unsigned k = 0; k < attempts; ++k) {
    std::vector<RingElement> f = a;
    if (k > 0) {
      const unsigned degree = std::min(degree_cap, (k - 1) / block);
      for (auto& fi : f)
        for (const auto& g : I2.generators()) fi = fi + random_element(R, rng, degree, 1, 3) * g;
    }
    const Ideal F(R, f);
    const Ideal K = tidy(ideal_quotient(F, I));
    auto fail = [&](const std::string& why) { last = list_string(f) + ": " + why; };
    if (!ideal_sum(I2, K).is_unit()) {
      fail("I^2 + K is proper");
      continue;
    }
    DimensionHeight kh = K.dimension_height();
    if (kh.height < static_cast<int>(n)) {
      fail("ht K = " + std::to_string(kh.height));
      continue;
    }
    if (!(ideal_product(I, K) == F)) {
      fail("<f> differs from I cap K");
      continue;
    }
    bool avoid_ok = true;
    for (std::size_t i = 0; i < avoid.size() && avoid_ok; ++i) {
      DimensionHeight jd = avoid[i].dimension_height();
      DimensionHeight sd = ideal_sum(avoid[i], K).dimension_height();
      if (!sd.empty() && (jd.empty() || sd.dim > jd.dim - static_cast<int>(n))) {
        fail("dim(R/(J" + std::to_string(i + 1) + " + K)) = " + std::to_string(sd.dim));
        avoid_ok = false;
      }
    }
    if (!avoid_ok) continue;
    return MovingEulerResult{K, std::move(f)};
  }
  throw Error(ErrorKind::MoveFailed,
              "moving_euler found no K in " + std::to_string(attempts) + " attempts; last candidate " + last);
}

namespace {

// -S as a symbol on the residual ideal, with the complete-intersection certificate on
// I cap K.
struct Negation {
  EulerSymbol partner;
  RelationWitness witness;
};

Negation negate_symbol(const EulerSymbol& S, const std::vector<Ideal>& avoid, std::uint64_t seed,
                       const ReductionOptions& options) {
  MovingEulerResult me = moving_euler(S.oriented(), avoid, seed, options.attempt_cap, options.degree_cap);
  EulerSymbol ci{Ideal(S.ring(), me.f), me.f, S.n};
  RelationWitness w = lift_witness(ci);
  if (me.K.is_unit()) return {EulerSymbol::zero(S.ring(), S.n), w};
  return {EulerSymbol::make(me.K, reduce_all(ideal_power(me.K, 2), me.f)), w};
}

}  // namespace

ReductionResult reduce_to_single(const EulerSum& S, const ReductionOptions& options) {
  if (!options.in_range)
    throw Error(ErrorKind::RangeViolation, "reduce_to_single needs the caller's certificate dim R <= 2n - 1");
  Rng rng(options.seed);
  ReductionResult out{EulerSymbol::zero(S.ring, S.n), {}};
  using Kind = ReductionStep::Kind;

  // Identical symbols are collected first, so that S - S cancels formally.
  std::vector<std::pair<long, EulerSymbol>> collected;
  for (const auto& [c, sym] : S.terms) {
    auto same = std::find_if(collected.begin(), collected.end(), [&](const auto& t) {
      return t.second.ideal == sym.ideal && t.second.a == sym.a;
    });
    if (same == collected.end()) collected.emplace_back(c, sym);
    else same->first += c;
  }

  std::vector<EulerSymbol> positive;
  for (const auto& [c, sym] : collected) {
    if (c == 0 || sym.is_zero()) {
      out.steps.push_back({Kind::DropZero, "drop zero term", {sym}, EulerSymbol::zero(S.ring, S.n), {}});
      continue;
    }
    if (c > 0) {
      for (long k = 0; k < c; ++k) positive.push_back(sym);
      continue;
    }
    Negation neg = negate_symbol(sym, {}, rng.next(), options);
    out.steps.push_back({Kind::Negate, "-" + sym.to_string() + " = " + neg.partner.to_string(), {sym}, neg.partner,
                         {neg.witness}});
    for (long k = 0; k < -c; ++k) positive.push_back(neg.partner);
  }

  std::optional<EulerSymbol> acc;
  for (EulerSymbol next : positive) {
    if (next.is_zero()) continue;
    if (!acc || acc->is_zero()) {
      acc = next;
      continue;
    }
    if (!ideal_sum(acc->ideal, next.ideal).is_unit()) {
      // next = -P1 = P2 with P1, P2 chosen away from the accumulated ideal.
      const std::vector<Ideal> avoid{acc->ideal};
      EulerSymbol original = next;
      bool separated = false;
      for (int tries = 0; tries < 3 && !separated; ++tries) {
        Negation first = negate_symbol(original, avoid, rng.next(), options);
        if (first.partner.is_zero()) {
          out.steps.push_back({Kind::DropZero, original.to_string() + " is a complete intersection", {original},
                               first.partner, {first.witness}});
          next = first.partner;
          separated = true;
          break;
        }
        Negation second = negate_symbol(first.partner, avoid, rng.next(), options);
        if (second.partner.is_zero() || ideal_sum(acc->ideal, second.partner.ideal).is_unit()) {
          out.steps.push_back({Kind::Separate, original.to_string() + " = " + second.partner.to_string(),
                               {original, first.partner}, second.partner, {first.witness, second.witness}});
          next = second.partner;
          separated = true;
        }
      }
      if (!separated)
        throw Error(ErrorKind::MoveFailed, "could not separate " + original.to_string() + " from " + acc->to_string());
      if (next.is_zero()) continue;
    }
    EulerSymbol merged = merge(*acc, next);
    out.steps.push_back({Kind::Merge, acc->to_string() + " + " + next.to_string() + " = " + merged.to_string(),
                         {*acc, next}, merged, {}});
    acc = merged;
  }
  if (acc) out.symbol = *acc;
  return out;
}

CohomotopyClass segre_hom(const EulerSum& S, const ComposeOptions& options) {
  Rng rng(options.seed);
  CohomotopyClass total = CohomotopyClass::base(S.ring, S.n);
  bool first = true;
  for (const auto& [c, sym] : S.terms) {
    if (c == 0) continue;
    CohomotopyClass term = CohomotopyClass::of(symbol_point(sym));
    if (c < 0) term = negate(term, rng.next());
    const long m = c < 0 ? -c : c;
    for (long k = 0; k < m; ++k) {
      if (first) {
        total = term;
        first = false;
        continue;
      }
      ComposeOptions o = options;
      o.seed = rng.next();
      total = add(total, term, o);
    }
  }
  return total;
}

WeakClass weak_class(const EulerSum& S) {
  WeakClass out;
  for (const auto& [c, sym] : S.terms) {
    if (sym.is_zero()) continue;
    DimensionHeight dh = sym.ideal.dimension_height();
    if (dh.dim != 0)
      throw Error(ErrorKind::NotZeroDimensional, sym.ideal.to_string() + " has dim R/I = " + std::to_string(dh.dim));
    out.cycles.emplace_back(sym.ideal, c);
    out.degree += c * sym.ideal.vector_space_dimension();
  }
  return out;
}

PhiResult phi(const UnimodularRow& row, std::uint64_t seed, unsigned attempt_cap) {
  const std::size_t len = row.entries.size();
  if (len < 2) throw Error(ErrorKind::ArityMismatch, "phi needs a row of length d + 1 >= 2");
  const std::size_t d = len - 1;
  const RingPtr& R = row.entries[0].ring();
  UnimodularRow cur = UnimodularRow::make(row.entries);
  ElementaryWord word;
  Rng rng(seed);
  for (unsigned k = 0; k <= attempt_cap; ++k) {
    std::vector<RingElement> head(cur.entries.begin(), cur.entries.begin() + static_cast<long>(d));
    Ideal I(R, head);
    if (I.is_unit()) return PhiResult{EulerSymbol::zero(R, d), cur, word};
    if (I.dimension_height().height == static_cast<int>(d)) {
      std::vector<RingElement> orient;
      for (const auto& x : head) orient.push_back(cur.entries[d] * x);
      Ideal It = tidy(I);
      return PhiResult{EulerSymbol::make(It, reduce_all(ideal_power(It, 2), orient)), cur, word};
    }
    // a_i += lambda a_j, mostly with j the last entry.
    ElementaryFactor f;
    f.i = static_cast<std::size_t>(rng.range(0, static_cast<long>(d) - 1));
    f.j = rng.range(0, 2) ? d : static_cast<std::size_t>(rng.range(0, static_cast<long>(d)));
    if (f.j == f.i) f.j = d;
    f.lambda = random_nonzero_element(R, rng, 1, 2, 3);
    cur.entries = apply_factor(f, cur.entries);
    word.factors.push_back(f);
  }
  throw Error(ErrorKind::MoveFailed, "no special row found from " + row.to_string());
}

}  // namespace euler
