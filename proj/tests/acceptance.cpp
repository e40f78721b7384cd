// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (capped at 255), not counting those listed with
// --allow-fail, which are still reported as FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <sstream>

#include "euler/cli.hpp"
#include "euler/cohomotopy.hpp"
#include "euler/errors.hpp"
#include "euler/euler.hpp"
#include "euler/fold.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "statement_generator.hpp"

using namespace euler;
using namespace testing_helpers;

namespace {

constexpr double kComposeBudgetSeconds = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool witness_ok(const RelationWitness& w) {
  return is_valid(w.homotopy) && w.homotopy.start() == w.from && w.homotopy.end() == w.to;
}

EulerSymbol random_symbol(const RingPtr& r, Rng& rng) {
  OrientedIdeal O = random_oriented(r, rng, random_ci_generators(r, rng));
  return EulerSymbol::make(O.ideal, O.a);
}

// Orientation entries of degree <= 2: elementary operations on the generators,
// plus a constant multiple of g_j g_k when the generators are linear.
OrientedIdeal low_degree_oriented(const RingPtr& r, Rng& rng) {
  std::vector<RingElement> g = random_ci_generators(r, rng);
  std::vector<RingElement> a = g;
  a[0] = a[0] + a[1].scaled(Coeff(rng.range(-2, 2)));
  a[1] = a[1] + a[0].scaled(Coeff(rng.range(-2, 2)));
  bool linear = true;
  for (const auto& x : g)
    for (const auto& t : x.value().terms()) linear = linear && t.mono.degree() <= 1;
  if (linear)
    for (auto& x : a) x = x + (g[rng.range(0, 1)] * g[rng.range(0, 1)]).scaled(Coeff(rng.range(-2, 2)));
  return make_oriented(Ideal(r, g), a);
}

// 1. Closure of compose and the product of ideals.
Outcome quadric_closure() {
  auto r = free_ring({"x", "y"});
  Rng rng(101);
  const auto t0 = Clock::now();
  int good = 0, moved = 0;
  for (int k = 0; k < 100; ++k) {
    QuadricPoint u = segre_class(low_degree_oriented(r, rng), rng.next());
    QuadricPoint w = segre_class(low_degree_oriented(r, rng), rng.next());
    ComposeOptions o;
    o.seed = rng.next();
    ComposeResult res = compose(u, w, o);
    if (res.move) ++moved;
    if (is_valid(res.h) &&
        vanishing_ideal(res.h) == ideal_product(vanishing_ideal(res.first), vanishing_ideal(res.second)))
      ++good;
  }
  const double secs = seconds_since(t0);
  return {good == 100 && secs < kComposeBudgetSeconds,
          std::to_string(good) + "/100 exact (" + std::to_string(moved) + " auto-moved), " + fmt("%.1f s", secs) +
              fmt(" < %.0f s", kComposeBudgetSeconds)};
}

// 2. Group axioms on ten points per field.
Outcome group_axioms() {
  int certified = 0, unknown = 0, triples = 0;
  for (auto field : {CoefficientField::rationals(), CoefficientField::prime(5)}) {
    auto r = free_ring({"x", "y"}, field);
    if (!in_group_range(r, 2)) return {false, "Q[x,y] reported out of range"};
    Rng rng(202);
    std::vector<QuadricPoint> pts;
    for (int k = 0; k < 10; ++k) {
      RingElement x = el(r, "x"), y = el(r, "y");
      RingElement p = RingElement::constant(r, Coeff(k % 5)), q = RingElement::constant(r, Coeff(k / 5));
      pts.push_back(segre_class(random_oriented(r, rng, {x - p, y - q}, 0), rng.next()));
    }
    auto tally = [&](bool ok) { ok ? ++certified : ++unknown; };
    QuadricPoint base = base_point(r, 2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const QuadricPoint& v = pts[i];
      tally(provably_equal(compose(v, base).h, v).equal);
      InverseResult inv = inverse(v, rng.next());
      tally(provably_equal(compose(v, inv.point).h, base, inv.ledger).equal);
      // Comaximal pair: no move, byte-identical.
      const QuadricPoint& w = pts[(i + 1) % pts.size()];
      tally(compose(v, w).h.to_string() == compose(w, v).h.to_string());
      // Same ideal, different orientation: the first operand is moved.
      QuadricPoint v2 = segre_class(random_oriented(r, rng, vanishing_ideal(v).groebner_elements(), 0), rng.next());
      ComposeOptions o;
      o.seed = rng.next();
      ComposeResult vw = compose(v, v2, o), wv = compose(v2, v, o);
      WitnessLedger ledger = vw.ledger;
      ledger.append(wv.ledger);
      tally(vw.h.to_string() == wv.h.to_string() || provably_equal(vw.h, wv.h, ledger).equal);
    }
    for (std::size_t i = 0; i + 2 < pts.size() && triples < 10; i += 2) {
      const QuadricPoint &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
      QuadricPoint left = compose(compose(a, b).h, c).h;
      QuadricPoint right = compose(a, compose(b, c).h).h;
      tally(provably_equal(left, right).equal);
      ++triples;
    }
  }
  return {unknown == 0 && triples >= 5,
          std::to_string(certified) + " certified, " + std::to_string(unknown) + " unknown, " +
              std::to_string(triples) + " associativity triples over Q and F5"};
}

// 3. Segre classes do not depend on the seed or on I^2 perturbations.
Outcome segre_well_defined() {
  auto r = free_ring({"x", "y"});
  Rng rng(303);
  int good = 0;
  for (int k = 0; k < 10; ++k) {
    auto g = random_ci_generators(r, rng);
    OrientedIdeal O = random_oriented(r, rng, g);
    QuadricPoint v1 = segre_class(O, rng.next()), v2 = segre_class(O, rng.next());
    std::vector<RingElement> perturbed = O.a;
    for (auto& x : perturbed) x = x + random_element(r, rng, 1, 2) * g[0] * g[1];
    QuadricPoint v3 = segre_class(make_oriented(O.ideal, perturbed), rng.next());
    if (provably_equal(v1, v2).equal && provably_equal(v1, v3).equal) ++good;
  }
  return {good == 10, std::to_string(good) + "/10 ideals (seeds and perturbations)"};
}

// 4. Homotopies of the two relations validate with the right endpoints.
Outcome relation_witnesses() {
  auto r = free_ring({"x", "y"});
  Rng rng(404);
  int lifts = 0, elementary = 0;
  for (int k = 0; k < 10; ++k) {
    auto g = random_ci_generators(r, rng);
    EulerSymbol ci = EulerSymbol::make(Ideal(r, g), random_oriented(r, rng, g, 0).a);
    // Only symbols whose orientation generates the ideal are complete intersections.
    if (!Ideal(r, ci.a).subset_of(ci.ideal) || !ci.ideal.subset_of(Ideal(r, ci.a))) ci = EulerSymbol::make(Ideal(r, g), g);
    RelationWitness w = lift_witness(ci);
    QuadricPoint target(ci.a, {RingElement::zero(r), RingElement::zero(r)}, RingElement::zero(r));
    if (witness_ok(w) && w.from == zero_point(r, 2) && w.to == target) ++lifts;

    EulerSymbol S = random_symbol(r, rng);
    std::size_t i = static_cast<std::size_t>(rng.range(0, 1));
    ElementaryFactor f{i, 1 - i, random_element(r, rng, 1, 2)};
    RelationWitness e = elementary_witness(S, f);
    if (witness_ok(e) && e.from == segre_class(S.oriented()) && e.to.a() == apply_factor(f, e.from.a()) &&
        e.to.b() == apply_inverse_transpose(f, e.from.b()) && e.to.s() == e.from.s())
      ++elementary;
  }
  return {lifts == 10 && elementary == 10,
          std::to_string(lifts) + "/10 complete-intersection, " + std::to_string(elementary) + "/10 elementary"};
}

// 5. segre_hom is additive on comaximal pairs.
Outcome concrete_additivity() {
  auto r = free_ring({"x", "y"});
  Rng rng(505);
  int pairs = 0, good = 0;
  for (int trial = 0; trial < 200 && pairs < 10; ++trial) {
    EulerSymbol J = random_symbol(r, rng), K = random_symbol(r, rng);
    if (!ideal_sum(J.ideal, K.ideal).is_unit()) continue;
    ++pairs;
    EulerSum S(r, 2);
    S.add(1, J).add(1, K);
    ComposeOptions o;
    o.seed = rng.next();
    CohomotopyClass c = segre_hom(S, o);
    if (provably_equal(c.representative, segre_class(merge(J, K).oriented()), c.ledger).equal) ++good;
  }
  return {pairs == 10 && good == 10, std::to_string(good) + "/" + std::to_string(pairs) + " comaximal pairs"};
}

// 6. The fold map restricts to the identity and lies on the quadric.
Outcome fold() {
  std::string detail;
  bool pass = true;
  for (std::size_t n : {1, 2}) {
    const auto t0 = Clock::now();
    FoldMap F = fold_map(n, CoefficientField::rationals());
    QuadricPoint id = identity_point(F.quadric);
    const bool left = F.restrict_left() == id, right = F.restrict_right() == id;
    const bool eq = F.point().residual().is_zero();
    pass = pass && left && right && eq;
    detail += "n=" + std::to_string(n) + ": sections " + (left && right ? "identity" : "NOT identity") +
              ", equation " + (eq ? "0" : "nonzero") + fmt(" (%.1f s)", seconds_since(t0)) + (n == 1 ? "; " : "");
  }
  return {pass, detail};
}

// 7. Moves with nonempty avoid lists.
Outcome moving() {
  auto check = [](const QuadricPoint& v, const MoveResult& m, const std::vector<Ideal>& avoid) {
    if (!is_valid(m.moved) || !(m.moved == move_with(v, m.mu))) return false;
    Ideal N = vanishing_ideal(m.moved);
    if (N.dimension_height().height < static_cast<int>(v.n())) return false;
    for (const auto& J : avoid)
      if (!ideal_sum(N, J).is_unit()) return false;
    return is_valid(m.homotopy) && m.homotopy.start() == v && m.homotopy.end() == m.moved;
  };
  auto run = [&](const CoefficientField& field, std::uint64_t seed, int& good, int& failed) {
    auto r = free_ring({"x", "y"}, field);
    Rng rng(seed);
    for (int k = 0; k < 50; ++k) {
      QuadricPoint v = segre_class(random_oriented(r, rng, random_ci_generators(r, rng)), rng.next());
      std::vector<Ideal> avoid{vanishing_ideal(v)};
      if (rng.range(0, 1)) avoid.push_back(Ideal(r, random_ci_generators(r, rng)));
      MoveConstraints c;
      c.avoid = avoid;
      c.rng_seed = rng.next();
      try {
        check(v, move(v, c), avoid) ? ++good : ++failed;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::MoveFailed) throw;
        ++failed;
      }
    }
  };
  int good_q = 0, failed_q = 0, good_3 = 0, failed_3 = 0;
  run(CoefficientField::rationals(), 707, good_q, failed_q);
  run(CoefficientField::prime(3), 708, good_3, failed_3);
  return {good_q == 50 && failed_q == 0, std::to_string(good_q) + "/50 over Q; F3: " + std::to_string(good_3) +
                                             " verified, " + std::to_string(failed_3) + " failed (reported)"};
}

oracle::Poly to_oracle(const Polynomial& p, std::size_t nvars) {
  oracle::Poly out;
  for (const auto& t : p.terms()) {
    oracle::Exps e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = t.mono[i];
    out[e] = t.coeff;
  }
  return out;
}

// 8. Membership and univariate intersections against the oracles.
Outcome groebner_oracle() {
  std::mt19937_64 gen(808);
  Rng rng(809);
  int certified = 0, disagreements = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(1 + k % 3);
    auto r = free_ring(names);
    std::vector<RingElement> gens;
    std::vector<oracle::Poly> og;
    for (int i = static_cast<int>(rng.range(1, 2)); i > 0; --i) {
      gens.push_back(random_element(r, rng, 3, 3));
      og.push_back(to_oracle(gens.back().value(), names.size()));
    }
    Ideal I(r, gens);
    RingElement f = random_element(r, rng, 2, 2);
    if (k % 2 == 0) {
      f = RingElement::zero(r);
      for (const auto& g : gens) f = f + random_element(r, rng, 1, 2) * g;
    }
    for (unsigned D = 0; D <= 2; ++D)
      if (oracle::member_bounded(og, to_oracle(f.value(), names.size()), names.size(), D)) {
        ++certified;
        if (!I.contains(f)) ++disagreements;
        break;
      }
  }
  auto r = free_ring({"x"});
  std::uniform_int_distribution<int> root(-3, 3);
  int lcm_good = 0;
  for (int k = 0; k < 50; ++k) {
    auto make = [&] {
      oracle::Dense d{mpq_class(1)};
      for (int i = 1 + static_cast<int>(gen() % 3); i > 0; --i)
        d = oracle::dense_mul(d, {mpq_class(-root(gen)), mpq_class(1)});
      return d;
    };
    auto to_ring = [&](const oracle::Dense& d) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < d.size(); ++i) terms.push_back({Monomial::variable(0, i), d[i]});
      return RingElement(r, r->poly().from_terms(terms));
    };
    auto a = make(), b = make();
    if (ideal_intersection(Ideal(r, {to_ring(a)}), Ideal(r, {to_ring(b)})) == Ideal(r, {to_ring(oracle::lcm(a, b))}))
      ++lcm_good;
  }
  return {disagreements == 0 && lcm_good == 50,
          std::to_string(certified) + "/200 oracle-certified memberships, " + std::to_string(disagreements) +
              " disagreements; lcm " + std::to_string(lcm_good) + "/50"};
}

// 9. Reduction of random signed sums to one symbol.
Outcome euler_reduction() {
  auto r = free_ring({"x", "y"});
  Rng rng(909);
  int chains = 0, degrees = 0;
  std::string mismatch;
  for (int k = 0; k < 20; ++k) {
    EulerSum S(r, 2);
    for (int t = static_cast<int>(rng.range(1, 4)); t > 0; --t) {
      const long c = rng.range(0, 3) ? 1 : -1;
      S.add(c, random_symbol(r, rng));
    }
    ReductionOptions o;
    o.seed = rng.next();
    ReductionResult res = reduce_to_single(S, o);
    bool complete = true;
    for (const auto& step : res.steps) {
      using Kind = ReductionStep::Kind;
      if (step.kind == Kind::Merge) {
        const EulerSymbol m = merge(step.inputs[0], step.inputs[1]);
        complete = complete && m.ideal == step.output.ideal && m.a == step.output.a;
      } else if (step.kind != Kind::DropZero || !step.witnesses.empty()) {
        complete = complete && !step.witnesses.empty();
        for (const auto& w : step.witnesses) complete = complete && witness_ok(w);
      }
    }
    if (!res.symbol.is_zero()) complete = complete && res.symbol.ideal.dimension_height().height == 2;
    if (complete) ++chains;
    EulerSum out(r, 2);
    if (!res.symbol.is_zero()) out.add(1, res.symbol);
    const long in_degree = weak_class(S).degree, out_degree = weak_class(out).degree;
    if (in_degree == out_degree) ++degrees;
    else if (mismatch.empty())
      mismatch = "; e.g. degree " + std::to_string(in_degree) + " -> " + std::to_string(out_degree);
  }
  return {chains == 20 && degrees == 20, std::to_string(chains) + "/20 complete chains, " + std::to_string(degrees) +
                                             "/20 weak degrees preserved" + mismatch};
}

// 10. Example sessions replay byte-identically; parse/print round trip.
Outcome cli_determinism() {
  namespace fs = std::filesystem;
  auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  int sessions = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(EULER_SOURCE_DIR) / "sessions")) {
    if (entry.path().extension() != ".euler") continue;
    ++sessions;
    auto golden = entry.path();
    golden.replace_extension(".expected");
    cli::Options o;
    o.seed = 7;
    o.witnesses = true;
    const std::string text = read(entry.path());
    std::ostringstream a, b, err;
    cli::run(text, o, a, err);
    cli::run(text, o, b, err);
    if (a.str() == b.str() && fs::exists(golden) && a.str() == read(golden)) ++identical;
  }
  StatementGenerator gen(1010);
  int round_trips = 0;
  for (int k = 0; k < 1000; ++k) {
    cli::Statement s = gen.next();
    const std::string text = cli::print(s);
    try {
      cli::Statement back = cli::parse_statement(text);
      if (back == s && cli::print(back) == text) ++round_trips;
    } catch (const Error&) {
    }
  }
  return {sessions > 0 && identical == sessions && round_trips == 1000,
          std::to_string(identical) + "/" + std::to_string(sessions) + " sessions identical, " +
              std::to_string(round_trips) + "/1000 round trips"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::size_t> allowed;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--allow-fail") allowed.insert(std::stoul(argv[++i]));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quadric closure and ideal product", quadric_closure},
      {"group axioms", group_axioms},
      {"segre well-definedness", segre_well_defined},
      {"relation witnesses", relation_witnesses},
      {"additivity on comaximal pairs", concrete_additivity},
      {"fold map", fold},
      {"moving", moving},
      {"groebner oracle", groebner_oracle},
      {"euler reduction", euler_reduction},
      {"cli determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool tolerated = !o.pass && allowed.count(i + 1);
    if (!o.pass && !tolerated) ++failed;
    std::printf("criterion %2zu %-36s %s  %s [%.1f s]%s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds_since(t0), tolerated ? " (known failure)" : "");
    std::fflush(stdout);
  }
  return failed > 255 ? 255 : failed;
}
