#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "euler/errors.hpp"
#include "euler/ideal.hpp"
#include "euler/kernels.hpp"
#include "oracles.hpp"

using namespace euler;

namespace {

RingPtr free_ring(std::vector<std::string> vars, OrderKind order = OrderKind::DegRevLex) {
  return PresentedRing::make(CoefficientField::rationals(), std::move(vars), std::vector<std::string>{}, order);
}

RingElement el(const RingPtr& r, const char* text) { return RingElement::parse(r, text); }

Ideal ideal(const RingPtr& r, std::vector<std::string> gens) { return Ideal::parse(r, gens); }

std::vector<std::string> strings(const PolyRing& P, const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(P.to_string(p));
  return out;
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

Polynomial random_poly(const PolyRing& P, std::mt19937_64& gen, unsigned degree, int terms) {
  std::vector<Term> out;
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> exp(0, degree);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned left = std::uniform_int_distribution<unsigned>(0, degree)(gen);
    for (std::size_t i = 0; i < P.nvars() && left > 0; ++i) {
      unsigned e = i + 1 == P.nvars() ? left : std::min(left, exp(gen));
      m.set(i, e);
      left -= e;
    }
    out.push_back({m, Coeff(coeff(gen))});
  }
  return P.from_terms(std::move(out));
}

}  // namespace

TEST(GroebnerBasis, LexExample) {
  auto r = free_ring({"x", "y"}, OrderKind::Lex);
  auto I = ideal(r, {"x^2", "x - y"});
  EXPECT_EQ(strings(r->poly(), I.basis()), (std::vector<std::string>{"x - y", "y^2"}));
}

TEST(GroebnerBasis, ExplicitOrderMatchesLex) {
  auto r = free_ring({"x", "y"});
  auto I = ideal(r, {"x^2", "x - y"});
  PolyRing lex(r->field(), r->variables(), MonomialOrder::lex(2));
  EXPECT_EQ(strings(lex, I.groebner_basis(MonomialOrder::lex(2))), (std::vector<std::string>{"x - y", "y^2"}));
}

TEST(GroebnerBasis, ZeroAndUnit) {
  auto r = free_ring({"x"});
  EXPECT_TRUE(Ideal(r, {RingElement::zero(r)}).basis().empty());
  EXPECT_TRUE(Ideal::zero(r).is_zero());
  auto u = ideal(r, {"x", "x - 1"});
  EXPECT_EQ(strings(r->poly(), u.basis()), (std::vector<std::string>{"1"}));
  EXPECT_TRUE(u.is_unit());
}

TEST(GroebnerBasis, PermutationInvariant) {
  auto r = free_ring({"x", "y", "z"});
  std::mt19937_64 gen(3);
  for (int k = 0; k < 20; ++k) {
    std::vector<RingElement> gens;
    for (int i = 0; i < 3; ++i) gens.emplace_back(r, random_poly(r->poly(), gen, 2, 3));
    Ideal a(r, gens);
    std::shuffle(gens.begin(), gens.end(), gen);
    Ideal b(r, gens);
    EXPECT_EQ(a.basis(), b.basis());
  }
}

TEST(Contains, Examples) {
  auto r = free_ring({"x", "y"});
  EXPECT_TRUE(ideal(r, {"x", "y"}).contains(el(r, "x*y + x^2")));
  EXPECT_FALSE(ideal(r, {"x"}).contains(el(r, "1")));
  EXPECT_TRUE(ideal(r, {"x^2 + y^2 - 1", "x - 1"}).contains(el(r, "y^2")));
  auto other = free_ring({"x", "y"});
  try {
    ideal(r, {"x"}).contains(el(other, "x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Contains, QuotientRing) {
  auto r = PresentedRing::make(CoefficientField::rationals(), {"x", "y"}, {"x^2 + y^2 - 1"});
  auto I = ideal(r, {"x - 1"});
  EXPECT_TRUE(I.contains(el(r, "y^2")));
  EXPECT_FALSE(I.contains(el(r, "y")));
}

TEST(IdealAlgebra, Examples) {
  auto r = free_ring({"x"});
  EXPECT_EQ(ideal_intersection(ideal(r, {"x"}), ideal(r, {"x - 1"})), ideal(r, {"x^2 - x"}));
  auto r2 = free_ring({"x", "y"});
  EXPECT_EQ(ideal_product(ideal(r2, {"x", "y"}), Ideal::unit(r2)), ideal(r2, {"x", "y"}));
  EXPECT_EQ(ideal_quotient(ideal(r2, {"x^2 - x", "y"}), ideal(r2, {"x", "y"})), ideal(r2, {"x - 1", "y"}));
  EXPECT_EQ(ideal_quotient(ideal(r2, {"x", "y"}), ideal(r2, {"x", "y"})), Ideal::unit(r2));
  EXPECT_EQ(ideal_power(ideal(r2, {"x", "y"}), 2), ideal(r2, {"x^2", "x*y", "y^2"}));
}

TEST(IdealAlgebra, QuotientInPresentedRing) {
  // In k[x,y]/(xy), <0> : x = <y>.
  auto r = PresentedRing::make(CoefficientField::rationals(), {"x", "y"}, {"x*y"});
  EXPECT_EQ(ideal_quotient(Ideal::zero(r), el(r, "x")), ideal(r, {"y"}));
  EXPECT_EQ(ideal_intersection(ideal(r, {"x"}), ideal(r, {"y"})), Ideal::zero(r));
}

TEST(Express, Examples) {
  auto r = free_ring({"x"});
  auto c = ideal(r, {"x"}).express(el(r, "x^2 - x"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], el(r, "x - 1"));
  c = ideal(r, {"x", "x - 1"}).express(el(r, "1"));
  EXPECT_EQ(c[0], el(r, "1"));
  EXPECT_EQ(c[1], el(r, "-1"));
  auto r2 = free_ring({"x", "y"});
  auto I = ideal(r2, {"x^2 + y^2 - 1", "x - 1"});
  c = I.express(el(r2, "y^2"));
  EXPECT_EQ(c[0] * I.generators()[0] + c[1] * I.generators()[1], el(r2, "y^2"));
  try {
    ideal(r, {"x"}).express(el(r, "1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMember);
  }
}

TEST(ComaximalWitness, Examples) {
  auto r = free_ring({"x"});
  auto w = comaximal_witness(ideal(r, {"x"}), ideal(r, {"x - 1"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->e, el(r, "x"));
  EXPECT_EQ(w->e_prime, el(r, "1 - x"));
  EXPECT_FALSE(comaximal_witness(ideal(r, {"x"}), ideal(r, {"x"})));
  auto r2 = free_ring({"x", "y"});
  w = comaximal_witness(ideal(r2, {"x", "y"}), ideal(r2, {"x - 1"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->e, el(r2, "x"));
  EXPECT_EQ(w->e_prime, el(r2, "1 - x"));
}

TEST(DimensionHeight, Examples) {
  auto r = free_ring({"x", "y"});
  auto dh = ideal(r, {"x"}).dimension_height();
  EXPECT_EQ(dh.dim, 1);
  EXPECT_EQ(dh.height, 1);
  auto r1 = free_ring({"x"});
  dh = Ideal::unit(r1).dimension_height();
  EXPECT_TRUE(dh.empty());
  EXPECT_EQ(dh.height, DimensionHeight::kInfinite);
  dh = ideal(r, {"x^2 - x", "y"}).dimension_height();
  EXPECT_EQ(dh.dim, 0);
  EXPECT_EQ(dh.height, 2);
  EXPECT_EQ(ideal(r, {"x^2 - x", "y"}).vector_space_dimension(), 2);
  EXPECT_THROW(ideal(r, {"x"}).vector_space_dimension(), Error);
}

TEST(DimensionHeight, SphereStaircase) {
  auto r = PresentedRing::make(CoefficientField::rationals(), {"x", "y", "z"}, {"x^2 + y^2 + z^2 - 1"});
  auto dh = ideal(r, {"z"}).dimension_height();
  EXPECT_EQ(dh.dim, 1);
  EXPECT_EQ(dh.height, 1);
  EXPECT_EQ(ideal(r, {"z", "y"}).vector_space_dimension(), 2);  // x = ±1
}

TEST(GroebnerProperties, MembershipAgreesWithLinearAlgebraOracle) {
  std::mt19937_64 gen(2024);
  int certified = 0;
  for (int k = 0; k < 120; ++k) {
    std::size_t nv = 1 + k % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(nv);
    auto r = free_ring(names);
    const PolyRing& P = r->poly();
    int ngens = 1 + static_cast<int>(gen() % 2);
    std::vector<RingElement> gens;
    std::vector<oracle::Poly> og;
    for (int i = 0; i < ngens; ++i) {
      gens.emplace_back(r, random_poly(P, gen, 3, 3));
      og.push_back(to_oracle(gens.back().value(), nv));
    }
    Ideal I(r, gens);
    Polynomial f = random_poly(P, gen, 2, 2);
    if (k % 2 == 0) {
      f = P.zero();
      for (const auto& g : gens) f = P.add(f, P.mul(random_poly(P, gen, 1, 2), g.value()));
    }
    RingElement fe(r, f);
    for (unsigned D = 0; D <= 2; ++D) {
      if (oracle::member_bounded(og, to_oracle(f, nv), nv, D)) {
        ++certified;
        EXPECT_TRUE(I.contains(fe)) << I.to_string() << " " << fe.to_string();
        break;
      }
    }
    if (I.contains(fe)) {
      auto c = I.express(fe);
      RingElement sum = RingElement::zero(r);
      for (std::size_t i = 0; i < c.size(); ++i) sum = sum + c[i] * gens[i];
      EXPECT_EQ(sum, fe);
    }
  }
  EXPECT_GE(certified, 60);
}

TEST(GroebnerProperties, UnivariateIntersectionIsLcm) {
  auto r = free_ring({"x"});
  std::mt19937_64 gen(77);
  std::uniform_int_distribution<int> root(-3, 3);
  for (int k = 0; k < 30; ++k) {
    // Products of linear factors give frequent common factors.
    auto make = [&] {
      oracle::Dense d{mpq_class(1)};
      int deg = 1 + static_cast<int>(gen() % 3);
      for (int i = 0; i < deg; ++i) d = oracle::dense_mul(d, {mpq_class(-root(gen)), mpq_class(1)});
      return d;
    };
    auto a = make(), b = make();
    auto to_ring = [&](const oracle::Dense& d) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < d.size(); ++i) terms.push_back({Monomial::variable(0, i), d[i]});
      return RingElement(r, r->poly().from_terms(terms));
    };
    Ideal meet = ideal_intersection(Ideal(r, {to_ring(a)}), Ideal(r, {to_ring(b)}));
    EXPECT_EQ(meet, Ideal(r, {to_ring(oracle::lcm(a, b))}));
  }
}

TEST(GroebnerProperties, IntersectionProductAndComaximality) {
  auto r = free_ring({"x", "y"});
  std::mt19937_64 gen(9);
  for (int k = 0; k < 25; ++k) {
    std::vector<RingElement> ga, gb;
    for (int i = 0; i < 2; ++i) {
      ga.emplace_back(r, random_poly(r->poly(), gen, 2, 3));
      gb.emplace_back(r, random_poly(r->poly(), gen, 2, 3));
    }
    Ideal I(r, ga), J(r, gb);
    Ideal meet = ideal_intersection(I, J);
    Ideal prod = ideal_product(I, J);
    EXPECT_TRUE(meet.subset_of(I));
    EXPECT_TRUE(meet.subset_of(J));
    EXPECT_TRUE(prod.subset_of(meet));
    if (auto w = comaximal_witness(I, J)) {
      EXPECT_TRUE(I.contains(w->e));
      EXPECT_TRUE(J.contains(w->e_prime));
      EXPECT_TRUE((w->e + w->e_prime).is_one());
      EXPECT_EQ(meet, prod);
    }
    Ideal bigger = ideal_sum(I, J);
    auto di = I.dimension_height(), db = bigger.dimension_height();
    EXPECT_GE(di.dim, db.dim);
  }
}

TEST(Kernels, ParallelMatchesSerial) {
  auto r = free_ring({"x", "y", "z"});
  std::mt19937_64 gen(1);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r->poly(), gen, 2, 3));
  auto basis = buchberger(r->poly(), gens).basis;
  std::vector<Polynomial> items;
  for (int i = 0; i < 64; ++i) items.push_back(random_poly(r->poly(), gen, 4, 6));
  EXPECT_EQ(reduce_batch(r->poly(), items, basis), reduce_batch_serial(r->poly(), items, basis));
}
