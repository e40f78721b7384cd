#pragma once

#include <set>
#include <string>
#include <vector>

#include "euler/cli.hpp"
#include "euler/random.hpp"

namespace testing_helpers {

using namespace euler;
using namespace euler::cli;

// Random statements for the round-trip property.
class StatementGenerator {
 public:
  explicit StatementGenerator(std::uint64_t seed) : rng_(seed) {}

  Statement next() {
    Statement s;
    switch (rng_.range(0, 5)) {
      case 0: {
        RingDecl d{name(), field(), {}, {}};
        for (int i = rng_.range(1, 3); i > 0; --i) d.variables.push_back(name());
        d.relations = exprs(0, 2);
        s.body = d;
        break;
      }
      case 1: s.body = IdealDecl{name(), exprs(0, 3), name()}; break;
      case 2: {
        PointDecl d;
        d.name = name();
        d.ring = name();
        const int n = static_cast<int>(rng_.range(1, 3));
        d.a = exprs(n, n);
        d.b = exprs(n, n);
        d.s = expr(3);
        s.body = d;
        break;
      }
      case 3: s.body = RowDecl{name(), exprs(1, 4), name()}; break;
      case 4: {
        Assertion a;
        a.kind = rng_.range(0, 1) ? Assertion::Kind::Equal : Assertion::Kind::Valid;
        a.names.push_back(name());
        if (a.kind == Assertion::Kind::Equal) a.names.push_back(name());
        s.body = a;
        break;
      }
      default: s.body = command(); break;
    }
    return s;
  }

 private:
  std::string name() {
    static const std::set<std::string> reserved = {"in", "over", "avoid", "equal", "valid"};
    static const std::string first = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
    static const std::string rest = "abcdefghijklmnopqrstuvwxyz0123456789_'";
    for (;;) {
      std::string out(1, first[rng_.range(0, static_cast<long>(first.size()) - 1)]);
      for (int i = rng_.range(0, 4); i > 0; --i) out.push_back(rest[rng_.range(0, static_cast<long>(rest.size()) - 1)]);
      if (!reserved.count(out)) return out;
    }
  }

  std::string field() {
    static const char* fields[] = {"QQ", "F3", "F5", "F7", "F101"};
    return fields[rng_.range(0, 4)];
  }

  ExprPtr expr(int depth) {
    const long pick = depth <= 0 ? rng_.range(0, 1) : rng_.range(0, 7);
    switch (pick) {
      case 0: return Expr::make_number(mpq_class(rng_.range(0, 20)));
      case 1: return Expr::make_variable(name());
      case 2: return Expr::make_binary(Expr::Kind::Add, expr(depth - 1), expr(depth - 1));
      case 3: return Expr::make_binary(Expr::Kind::Sub, expr(depth - 1), expr(depth - 1));
      case 4: return Expr::make_binary(Expr::Kind::Mul, expr(depth - 1), expr(depth - 1));
      case 5: return Expr::make_binary(Expr::Kind::Div, expr(depth - 1), expr(depth - 1));
      case 6: return Expr::make_neg(expr(depth - 1));
      default: return Expr::make_pow(expr(depth - 1), static_cast<unsigned>(rng_.range(0, 5)));
    }
  }

  std::vector<ExprPtr> exprs(int lo, int hi) {
    std::vector<ExprPtr> out;
    for (int i = static_cast<int>(rng_.range(lo, hi)); i > 0; --i) out.push_back(expr(3));
    return out;
  }

  std::vector<SymbolTerm> terms(int count) {
    std::vector<SymbolTerm> out;
    for (int i = 0; i < count; ++i) {
      SymbolTerm t;
      t.coeff = rng_.range(0, 3) ? (rng_.range(0, 1) ? 1 : -1) : rng_.range(-9, 9);
      t.name = name();
      t.inline_orientation = rng_.range(0, 3) != 0;
      if (t.inline_orientation) t.orientation = exprs(1, 3);
      out.push_back(std::move(t));
    }
    return out;
  }

  Command command() {
    Command c;
    c.verb = verbs()[rng_.range(0, static_cast<long>(verbs().size()) - 1)];
    const std::string& v = c.verb;
    if (v == "validate") {
      c.inputs = {name()};
    } else if (v == "equal?") {
      c.inputs = {name(), name()};
    } else if (v == "ideal-of" || v == "inverse" || v == "phi") {
      c.output = name();
      c.inputs = {name()};
    } else if (v == "segre") {
      c.output = name();
      c.terms = terms(1);
      c.terms[0].coeff = 1;
      c.terms[0].inline_orientation = true;
      if (c.terms[0].orientation.empty()) c.terms[0].orientation = exprs(1, 2);
    } else if (v == "move") {
      c.output = name();
      c.inputs = {name()};
      for (int i = rng_.range(0, 3); i > 0; --i) c.avoid.push_back(name());
    } else if (v == "compose") {
      c.output = name();
      c.inputs = {name(), name()};
    } else if (v == "euler-reduce") {
      c.output = name();
      c.terms = terms(static_cast<int>(rng_.range(1, 4)));
    } else if (v == "weak-class") {
      c.terms = terms(static_cast<int>(rng_.range(1, 4)));
    } else {
      c.output = name();
      c.n = static_cast<unsigned long>(rng_.range(0, 5));
      c.field = field();
    }
    return c;
  }

  Rng rng_;
};

}  // namespace testing_helpers
