#include "euler/cohomotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "euler/errors.hpp"
#include "euler/euler.hpp"
#include "euler/sampling.hpp"

namespace euler {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Homotopy: return "homotopy";
    case WitnessKind::IdealCriterion: return "ideal-criterion";
    case WitnessKind::UnitIdeals: return "unit-ideals";
    case WitnessKind::Identical: return "identical";
  }
  return "?";
}

std::string Witness::to_string() const {
  std::string out = std::string(euler::to_string(kind)) + " " + from.to_string() + " ~ " + to.to_string();
  if (homotopy) out += " via " + homotopy->point().to_string();
  if (!note.empty()) out += " [" + note + "]";
  return out;
}

void WitnessLedger::add_homotopy(const Homotopy& h, std::string note) {
  entries_.push_back(Witness{WitnessKind::Homotopy, h.start(), h.end(), h, std::move(note)});
}

void WitnessLedger::append(const WitnessLedger& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

namespace {

void require_compatible(const QuadricPoint& u, const QuadricPoint& w, const char* where) {
  require_same_ring(u.ring(), w.ring(), where);
  if (u.n() != w.n()) throw Error(ErrorKind::ArityMismatch, std::string(where) + ": points on different quadrics");
}

}  // namespace

std::optional<Witness> ideal_criterion(const QuadricPoint& u, const QuadricPoint& w) {
  require_compatible(u, w, "ideal criterion");
  Ideal I = vanishing_ideal(u);
  if (!(I == vanishing_ideal(w))) return std::nullopt;
  std::vector<RingElement> diffs;
  for (std::size_t i = 0; i < u.n(); ++i) diffs.push_back(u.a()[i] - w.a()[i]);
  if (!ideal_power(I, 2).contains_all(diffs)) return std::nullopt;
  if (!check_orientation(I, u.a()) || !check_orientation(I, w.a())) return std::nullopt;
  return Witness{WitnessKind::IdealCriterion, u, w, std::nullopt, "I = " + I.to_string()};
}

EqualityVerdict provably_equal(const QuadricPoint& u, const QuadricPoint& w, const WitnessLedger& ledger) {
  require_compatible(u, w, "provably_equal");
  const RingPtr& R = u.ring();
  const std::size_t n = u.n();
  if (u == w) return {true, {Witness{WitnessKind::Identical, u, w, std::nullopt, ""}}};

  // Nodes are distinct points; identical points collapse into one node.
  std::vector<QuadricPoint> nodes;
  std::map<std::string, std::size_t> index;
  auto node = [&](const QuadricPoint& p) {
    auto [it, fresh] = index.emplace(p.to_string(), nodes.size());
    if (fresh) nodes.push_back(p);
    return it->second;
  };
  struct Edge {
    std::size_t to;
    Witness witness;
  };
  std::vector<std::vector<Edge>> registered;
  auto add_homotopy = [&](const Witness& wt) {
    if (wt.from.ring().get() != R.get() || wt.from.n() != n) return;
    std::size_t a = node(wt.from), b = node(wt.to);
    registered.resize(nodes.size());
    registered[a].push_back({b, wt});
    Witness back = wt;
    std::swap(back.from, back.to);
    back.note = back.note.empty() ? "reversed" : back.note + ", reversed";
    registered[b].push_back({a, back});
  };
  const std::size_t source = node(u);
  const std::size_t target = node(w);
  node(base_point(R, n));
  Homotopy bridge = base_bridge(R, n);
  add_homotopy(Witness{WitnessKind::Homotopy, bridge.start(), bridge.end(), bridge, "base bridge"});
  for (const auto& wt : ledger.entries())
    if (wt.kind == WitnessKind::Homotopy) add_homotopy(wt);
  registered.resize(nodes.size());

  // Implicit edges are decided lazily, grouped by the vanishing ideal basis.
  std::vector<std::optional<Ideal>> ideals(nodes.size());
  std::vector<std::optional<std::string>> keys(nodes.size());
  auto key = [&](std::size_t i) -> const std::string& {
    if (!keys[i]) {
      ideals[i] = vanishing_ideal(nodes[i]);
      std::string k;
      for (const auto& g : ideals[i]->basis()) k += R->poly().to_string(g) + ";";
      keys[i] = k;
    }
    return *keys[i];
  };
  const std::string unit_key = R->poly().to_string(R->poly().one()) + ";";

  std::vector<int> parent(nodes.size(), -1);
  std::vector<std::optional<Witness>> via(nodes.size());
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == target) break;
    auto visit = [&](std::size_t next, Witness wt) {
      seen[next] = true;
      parent[next] = static_cast<int>(cur);
      via[next] = std::move(wt);
      queue.push_back(next);
    };
    for (const auto& e : registered[cur])
      if (!seen[e.to]) visit(e.to, e.witness);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (seen[j] || key(j) != key(cur)) continue;
      if (key(cur) == unit_key) {
        visit(j, Witness{WitnessKind::UnitIdeals, nodes[cur], nodes[j], std::nullopt, ""});
      } else if (auto wt = ideal_criterion(nodes[cur], nodes[j])) {
        visit(j, std::move(*wt));
      }
    }
  }
  if (!seen[target]) return {};
  EqualityVerdict out{true, {}};
  for (std::size_t cur = target; cur != source; cur = static_cast<std::size_t>(parent[cur]))
    out.chain.push_back(*via[cur]);
  std::reverse(out.chain.begin(), out.chain.end());
  return out;
}

QuadricPoint move_with(const QuadricPoint& v, const std::vector<RingElement>& mu) {
  if (mu.size() != v.n()) throw Error(ErrorKind::ArityMismatch, "move needs one mu entry per coordinate");
  const RingPtr& R = v.ring();
  RingElement one = RingElement::one(R);
  RingElement t = one - v.s();
  RingElement t2 = t * t;
  RingElement mb = dot(mu, v.b());
  std::vector<RingElement> a, b;
  for (std::size_t i = 0; i < v.n(); ++i) {
    a.push_back(v.a()[i] + mu[i] * t2);
    b.push_back(v.b()[i] * (one - mb));
  }
  return QuadricPoint(std::move(a), std::move(b), v.s() + mb * t);
}

Homotopy move_homotopy(const QuadricPoint& v, const std::vector<RingElement>& mu) {
  RingPtr ext = v.ring()->homotopy_extension();
  RingElement T = homotopy_parameter(v.ring());
  std::vector<RingElement> a, b, tmu;
  for (std::size_t i = 0; i < v.n(); ++i) {
    a.push_back(lift_to_homotopy(v.a()[i]));
    b.push_back(lift_to_homotopy(v.b()[i]));
    tmu.push_back(T * lift_to_homotopy(mu.at(i)));
  }
  return Homotopy(move_with(QuadricPoint(std::move(a), std::move(b), lift_to_homotopy(v.s())), tmu));
}

std::optional<std::string> move_failure(const QuadricPoint& moved, const std::vector<Ideal>& avoid) {
  Ideal N = vanishing_ideal(moved);
  DimensionHeight dh = N.dimension_height();
  if (dh.height < static_cast<int>(moved.n()))
    return "ht(N) = " + std::to_string(dh.height) + " < " + std::to_string(moved.n());
  for (std::size_t i = 0; i < avoid.size(); ++i)
    if (!ideal_sum(N, avoid[i]).is_unit()) return "N + J" + std::to_string(i + 1) + " is a proper ideal";
  return std::nullopt;
}

MoveResult move(const QuadricPoint& v, const MoveConstraints& constraints) {
  validate(v);
  const RingPtr& R = v.ring();
  const std::size_t n = v.n();
  for (const auto& J : constraints.avoid) require_same_ring(J.ring(), R, "move avoid ideal");
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < constraints.avoid.size(); ++i) {
    DimensionHeight dh = constraints.avoid[i].dimension_height();
    if (!dh.empty() && dh.dim > static_cast<int>(n) - 1)
      warnings.push_back("dim(R/J" + std::to_string(i + 1) + ") = " + std::to_string(dh.dim) + " exceeds n - 1 = " +
                         std::to_string(n - 1));
  }

  Rng rng(constraints.rng_seed);
  const unsigned attempts = std::max(1u, constraints.attempt_cap);
  const unsigned block = std::max(1u, attempts / (constraints.degree_cap + 1));
  std::string last = "no candidate tried";
  for (unsigned k = 0; k < attempts; ++k) {
    std::vector<RingElement> mu;
    if (k == 0 && constraints.allow_zero) {
      mu.assign(n, RingElement::zero(R));
    } else {
      const unsigned step = constraints.allow_zero ? k - 1 : k;
      const unsigned degree = std::min(constraints.degree_cap, step / block);
      const long bound = 2 + static_cast<long>(step % block) / 8;
      for (std::size_t i = 0; i < n; ++i) mu.push_back(random_element(R, rng, degree, 1 + degree, bound));
    }
    QuadricPoint moved = move_with(v, mu);
    auto failure = move_failure(moved, constraints.avoid);
    if (!failure) return MoveResult{moved, mu, move_homotopy(v, mu), std::move(warnings)};
    last = moved.to_string() + ": " + *failure;
  }
  throw Error(ErrorKind::MoveFailed,
              "no mu found in " + std::to_string(attempts) + " attempts; last candidate " + last);
}

namespace {

bool comaximal(const Ideal& I, const Ideal& J) { return ideal_sum(I, J).is_unit(); }

// One pass of the construction; nullopt when a postcondition fails.
std::optional<ComposeResult> compose_once(const QuadricPoint& p, const QuadricPoint& q) {
  const RingPtr& R = p.ring();
  const std::size_t n = p.n();
  const Ideal I = vanishing_ideal(p);
  const Ideal J = vanishing_ideal(q);
  RingElement one = RingElement::one(R);
  ComaximalityWitness crt{one, RingElement::zero(R)};
  if (I.is_unit()) {
    crt = {one, RingElement::zero(R)};
  } else if (J.is_unit()) {
    crt = {RingElement::zero(R), one};
  } else if (auto w = comaximal_witness(I, J)) {
    // e mod IJ is still in I with 1 - e in J, and is canonical.
    RingElement e = ideal_product(I, J).reduce(w->e);
    crt = {e, one - e};
  } else {
    return std::nullopt;
  }
  const RingElement e2 = crt.e * crt.e;
  const RingElement ep2 = crt.e_prime * crt.e_prime;
  std::vector<RingElement> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(ep2 * p.a()[i] + e2 * q.a()[i]);

  IdempotentLift lp, lq;
  try {
    lp = idempotent_lift(OrientedIdeal{I, c});
    lq = idempotent_lift(OrientedIdeal{J, c});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotOriented) return std::nullopt;
    throw;
  }
  // x = 1/2 [(c.d') d + (c.d) d'] + u'^2 d + u^2 d', symmetric in the two
  // operands and satisfying u u'(1 - u u') = c.x^t.
  const RingElement cd = dot(c, lp.b);
  const RingElement cdp = dot(c, lq.b);
  const RingElement u2 = lp.s * lp.s;
  const RingElement up2 = lq.s * lq.s;
  const Coeff half(1, 2);
  std::vector<RingElement> x;
  for (std::size_t i = 0; i < n; ++i)
    x.push_back((cdp * lp.b[i] + cd * lq.b[i]).scaled(half) + up2 * lp.b[i] + u2 * lq.b[i]);
  QuadricPoint h(c, x, lp.s * lq.s);

  if (!is_valid(h)) return std::nullopt;
  const Ideal Ih = vanishing_ideal(h);
  if (!(Ih == ideal_product(I, J))) return std::nullopt;
  if (!check_orientation(Ih, c)) return std::nullopt;
  ComposeResult out{h, p, q, std::nullopt, crt, c, lp, lq, {}};
  return out;
}

}  // namespace

ComposeResult compose(const QuadricPoint& u, const QuadricPoint& w, const ComposeOptions& options) {
  require_compatible(u, w, "compose");
  validate(u);
  validate(w);
  const bool swap = w.to_string() < u.to_string();
  const QuadricPoint& first = swap ? w : u;
  const QuadricPoint& second = swap ? u : w;
  const Ideal J = vanishing_ideal(second);

  MoveConstraints mc;
  mc.avoid = {J};
  mc.rng_seed = options.seed;
  mc.degree_cap = options.degree_cap;
  mc.attempt_cap = options.attempt_cap;

  std::optional<MoveResult> mv;
  if (!comaximal(vanishing_ideal(first), J)) mv = move(first, mc);
  auto attempt = [&]() {
    auto r = compose_once(mv ? mv->moved : first, second);
    if (r && mv) {
      r->move = mv;
      r->ledger.add_homotopy(mv->homotopy, "move");
    }
    return r;
  };
  if (auto r = attempt()) return *r;
  // One re-randomized move, then give up.
  mc.rng_seed = Rng(options.seed).fork(0x5eed).next();
  mc.allow_zero = false;
  mv = move(first, mc);
  if (auto r = attempt()) return *r;
  throw Error(ErrorKind::ConstructionFailed,
              "composition of " + u.to_string() + " and " + w.to_string() + " failed its postconditions twice");
}

InverseResult inverse(const QuadricPoint& v, std::uint64_t seed, unsigned attempt_cap, unsigned degree_cap) {
  validate(v);
  const RingPtr& R = v.ring();
  const std::size_t n = v.n();
  Ideal I = vanishing_ideal(v);
  if (I.is_unit()) return InverseResult{base_point(R, n), Ideal::unit(R), v.a(), {}};
  DimensionHeight dh = I.dimension_height();
  if (dh.height != static_cast<int>(n))
    throw Error(ErrorKind::HeightViolation,
                "inverse needs ht I(v) = " + std::to_string(n) + ", got " + std::to_string(dh.height));
  MovingEulerResult me = moving_euler(OrientedIdeal{I, v.a()}, {}, seed, attempt_cap, degree_cap);
  QuadricPoint point = segre_class(OrientedIdeal{me.K, me.f});

  RingPtr ext = R->homotopy_extension();
  RingElement T = homotopy_parameter(R);
  std::vector<RingElement> ft, zeros(n, RingElement::zero(ext));
  for (const auto& f : me.f) ft.push_back(T * lift_to_homotopy(f));
  WitnessLedger ledger;
  ledger.add_homotopy(Homotopy(QuadricPoint(ft, zeros, RingElement::zero(ext))), "complete intersection I cap K");
  return InverseResult{point, me.K, me.f, std::move(ledger)};
}

bool in_group_range(const RingPtr& ring, std::size_t n) {
  return ring->dimension() <= 2 * static_cast<int>(n) - 2;
}

CohomotopyClass CohomotopyClass::of(QuadricPoint v) {
  validate(v);
  bool range = in_group_range(v.ring(), v.n());
  return CohomotopyClass{std::move(v), {}, range};
}

CohomotopyClass CohomotopyClass::base(const RingPtr& ring, std::size_t n) { return of(base_point(ring, n)); }

CohomotopyClass add(const CohomotopyClass& x, const CohomotopyClass& y, const ComposeOptions& options) {
  ComposeResult r = compose(x.representative, y.representative, options);
  CohomotopyClass out{r.h, x.ledger, x.in_range && y.in_range};
  out.ledger.append(y.ledger);
  out.ledger.append(r.ledger);
  return out;
}

CohomotopyClass negate(const CohomotopyClass& x, std::uint64_t seed) {
  InverseResult r = inverse(x.representative, seed);
  CohomotopyClass out{r.point, x.ledger, x.in_range};
  out.ledger.append(r.ledger);
  return out;
}

EqualityVerdict provably_equal(const CohomotopyClass& x, const CohomotopyClass& y) {
  WitnessLedger all = x.ledger;
  all.append(y.ledger);
  return provably_equal(x.representative, y.representative, all);
}

}  // namespace euler
