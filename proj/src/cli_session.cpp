#include <ostream>

#include "euler/cli.hpp"
#include "euler/errors.hpp"
#include "euler/fold.hpp"
#include "euler/random.hpp"

namespace euler::cli {

namespace {

std::string count(std::size_t k, const std::string& noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

std::string list_string(const std::vector<RingElement>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out + "]";
}

std::string ring_string(const PresentedRing& r) {
  std::string out = r.field().characteristic() == 0 ? "QQ" : "F" + std::to_string(r.field().characteristic());
  out += "[";
  for (std::size_t i = 0; i < r.nvars(); ++i) out += (i ? ", " : "") + r.variables()[i];
  out += "]";
  if (!r.relations().empty()) {
    out += " / (";
    for (std::size_t i = 0; i < r.relations().size(); ++i)
      out += (i ? ", " : "") + r.poly().to_string(r.relations()[i]);
    out += ")";
  }
  return out;
}

CoefficientField field_of(const std::string& f) {
  if (f == "QQ") return CoefficientField::rationals();
  return CoefficientField::prime(std::stoul(f.substr(1)));
}

RingElement element(const RingPtr& r, const ExprPtr& e) { return RingElement(r, r->poly().from_expr(*e)); }

std::vector<RingElement> elements(const RingPtr& r, const std::vector<ExprPtr>& es) {
  std::vector<RingElement> out;
  for (const auto& e : es) out.push_back(element(r, e));
  return out;
}

// Generators replaced by the reduced basis, so printed ideals are canonical.
std::string ideal_string(const Ideal& I) {
  if (I.is_unit()) return "<1>";
  return Ideal(I.ring(), I.groebner_elements()).to_string();
}

QuadricPoint symbol_point(const EulerSymbol& S) {
  if (S.is_zero()) return base_point(S.ring(), S.n);
  return segre_class(S.oriented());
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

template <class T>
const T& Session::lookup(const std::string& name, const char* kind) const {
  auto it = values_.find(name);
  if (it == values_.end() || !std::holds_alternative<T>(it->second))
    throw Error(ErrorKind::ArityMismatch, std::string("'") + name + "' is not a " + kind);
  return std::get<T>(it->second);
}

RingPtr Session::make_ring(const RingDecl& d) const {
  OrderKind order = options_.order == OrderChoice::Lex ? OrderKind::Lex : OrderKind::DegRevLex;
  return PresentedRing::make(field_of(d.field), d.variables, d.relations, order);
}

EulerSum Session::make_sum(const std::vector<SymbolTerm>& terms) const {
  std::optional<EulerSum> sum;
  for (const auto& t : terms) {
    EulerSymbol S;
    if (t.inline_orientation) {
      const Ideal& I = lookup<Ideal>(t.name, "ideal");
      S = EulerSymbol::make(I, elements(I.ring(), t.orientation));
    } else {
      S = lookup<EulerSymbol>(t.name, "symbol");
    }
    if (!sum) sum.emplace(S.ring(), S.n);
    sum->add(t.coeff, std::move(S));
  }
  return *sum;
}

void Session::execute(const Statement& s, std::ostream& out) {
  const std::uint64_t index = counter_++;
  out << "> " << print(s) << "\n";
  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, RingDecl>) {
          RingPtr r = make_ring(b);
          out << b.name << " = " << ring_string(*r) << ", dim " << r->dimension() << "\n";
          values_[b.name] = r;
        } else if constexpr (std::is_same_v<B, IdealDecl>) {
          const RingPtr& r = lookup<RingPtr>(b.ring, "ring");
          Ideal I(r, elements(r, b.generators));
          out << b.name << " = " << ideal_string(I) << "\n";
          values_[b.name] = I;
        } else if constexpr (std::is_same_v<B, PointDecl>) {
          const RingPtr& r = lookup<RingPtr>(b.ring, "ring");
          QuadricPoint v(elements(r, b.a), elements(r, b.b), element(r, b.s));
          out << b.name << " = " << v.to_string() << "\n";
          values_[b.name] = v;
        } else if constexpr (std::is_same_v<B, RowDecl>) {
          const RingPtr& r = lookup<RingPtr>(b.ring, "ring");
          UnimodularRow row = UnimodularRow::make(elements(r, b.entries));
          out << b.name << " = " << row.to_string() << "\n";
          values_[b.name] = row;
        } else if constexpr (std::is_same_v<B, Command>) {
          seed_ = Rng(options_.seed).fork(index).next();
          run_command(b, out);
        } else {
          run_assertion(b, out);
        }
      },
      s.body);
}

void Session::run_command(const Command& c, std::ostream& out) {
  const std::string& v = c.verb;
  const bool w = options_.witnesses;
  if (v == "validate") {
    const auto& p = lookup<QuadricPoint>(c.inputs[0], "point");
    try {
      validate(p);
      out << c.inputs[0] << " is valid\n";
    } catch (const Error& e) {
      out << c.inputs[0] << " is not valid: " << e.what() << "\n";
    }
  } else if (v == "ideal-of") {
    Ideal I = vanishing_ideal(lookup<QuadricPoint>(c.inputs[0], "point"));
    out << c.output << " = " << ideal_string(I) << "\n";
    values_[c.output] = I;
  } else if (v == "segre") {
    const SymbolTerm& t = c.terms[0];
    const Ideal& I = lookup<Ideal>(t.name, "ideal");
    OrientedIdeal O = make_oriented(I, elements(I.ring(), t.orientation));
    QuadricPoint p = segre_class(O, seed_);
    out << c.output << " = " << p.to_string() << "\n";
    values_[c.output] = p;
  } else if (v == "move") {
    MoveConstraints mc;
    for (const auto& name : c.avoid) mc.avoid.push_back(lookup<Ideal>(name, "ideal"));
    mc.rng_seed = seed_;
    mc.degree_cap = options_.degree_cap;
    mc.attempt_cap = options_.attempts;
    MoveResult m = move(lookup<QuadricPoint>(c.inputs[0], "point"), mc);
    out << c.output << " = " << m.moved.to_string() << "\n";
    out << "  mu = " << list_string(m.mu) << "\n";
    for (const auto& warning : m.warnings) out << "  warning: " << warning << "\n";
    if (w) out << "  homotopy " << m.homotopy.point().to_string() << "\n";
    ledger_.add_homotopy(m.homotopy, "move " + c.output);
    values_[c.output] = m.moved;
  } else if (v == "compose") {
    ComposeOptions o;
    o.seed = seed_;
    o.degree_cap = options_.degree_cap;
    o.attempt_cap = options_.attempts;
    ComposeResult r =
        compose(lookup<QuadricPoint>(c.inputs[0], "point"), lookup<QuadricPoint>(c.inputs[1], "point"), o);
    out << c.output << " = " << r.h.to_string() << "\n";
    out << "  ideal " << ideal_string(vanishing_ideal(r.h)) << "\n";
    if (r.move) out << "  moved first operand to " << r.move->moved.to_string() << "\n";
    if (w) {
      out << "  crt e = " << r.crt.e.to_string() << ", e' = " << r.crt.e_prime.to_string() << "\n";
      out << "  c = " << list_string(r.c) << "\n";
      out << "  lift first: s = " << r.lift_first.s.to_string() << ", b = " << list_string(r.lift_first.b) << "\n";
      out << "  lift second: s = " << r.lift_second.s.to_string() << ", b = " << list_string(r.lift_second.b)
          << "\n";
      if (r.move) out << "  homotopy " << r.move->homotopy.point().to_string() << "\n";
    }
    ledger_.append(r.ledger);
    values_[c.output] = r.h;
  } else if (v == "inverse") {
    InverseResult r = inverse(lookup<QuadricPoint>(c.inputs[0], "point"), seed_, options_.attempts,
                              std::min(1u, options_.degree_cap));
    out << c.output << " = " << r.point.to_string() << "\n";
    out << "  residual " << ideal_string(r.K) << "\n";
    if (w) {
      out << "  f = " << list_string(r.f) << "\n";
      for (const auto& e : r.ledger.entries()) out << "  homotopy " << e.homotopy->point().to_string() << "\n";
    }
    ledger_.append(r.ledger);
    values_[c.output] = r.point;
  } else if (v == "equal?") {
    auto it = values_.find(c.inputs[0]);
    std::string verdict;
    std::vector<Witness> chain;
    if (std::holds_alternative<Ideal>(it->second)) {
      verdict = lookup<Ideal>(c.inputs[0], "ideal") == lookup<Ideal>(c.inputs[1], "ideal") ? "equal" : "different";
    } else {
      QuadricPoint p, q;
      if (std::holds_alternative<EulerSymbol>(it->second)) {
        p = symbol_point(lookup<EulerSymbol>(c.inputs[0], "symbol"));
        q = symbol_point(lookup<EulerSymbol>(c.inputs[1], "symbol"));
      } else {
        p = lookup<QuadricPoint>(c.inputs[0], "point");
        q = lookup<QuadricPoint>(c.inputs[1], "point");
      }
      EqualityVerdict e = provably_equal(p, q, ledger_);
      verdict = e.equal ? "equal (" + count(e.chain.size(), "step") + ")" : "unknown";
      chain = e.chain;
    }
    out << c.inputs[0] << " ~ " << c.inputs[1] << ": " << verdict << "\n";
    if (w)
      for (const auto& x : chain) out << "  " << x.to_string() << "\n";
  } else if (v == "phi") {
    PhiResult r = phi(lookup<UnimodularRow>(c.inputs[0], "row"), seed_, options_.attempts);
    out << c.output << " = " << r.symbol.to_string() << "\n";
    out << "  special row " << r.special_row.to_string() << " after "
        << count(r.column_moves.factors.size(), "move") << "\n";
    if (w)
      for (const auto& f : r.column_moves.factors)
        out << "  a" << f.i + 1 << " += (" << f.lambda.to_string() << ") a" << f.j + 1 << "\n";
    values_[c.output] = r.symbol;
  } else if (v == "euler-reduce") {
    EulerSum S = make_sum(c.terms);
    ReductionOptions o;
    o.seed = seed_;
    o.attempt_cap = options_.attempts;
    o.degree_cap = std::min(1u, options_.degree_cap);
    o.in_range = S.ring->dimension() <= 2 * static_cast<int>(S.n) - 1;
    ReductionResult r = reduce_to_single(S, o);
    out << c.output << " = " << r.symbol.to_string() << "\n";
    out << "  " << count(r.steps.size(), "step") << "\n";
    if (w)
      for (const auto& step : r.steps) {
        out << "  " << step.description << "\n";
        for (const auto& x : step.witnesses) out << "    homotopy " << x.homotopy.point().to_string() << "\n";
      }
    for (const auto& step : r.steps)
      for (const auto& x : step.witnesses) ledger_.add_homotopy(x.homotopy, step.description);
    values_[c.output] = r.symbol;
  } else if (v == "weak-class") {
    WeakClass wc = weak_class(make_sum(c.terms));
    out << "degree " << wc.degree << "\n";
    for (const auto& [I, m] : wc.cycles) out << "  " << m << " * " << ideal_string(I) << "\n";
  } else if (v == "fold-map") {
    FoldMap F = fold_map(c.n, field_of(c.field));
    QuadricPoint p = F.point();
    QuadricPoint id = identity_point(F.quadric);
    out << c.output << " on a device with " << F.device.ring->nvars() << " variables and "
        << F.device.ring->relations().size() << " relations\n";
    out << "  c = " << list_string(F.c) << "\n";
    out << "  on the quadric: " << yes_no(is_valid(p)) << "\n";
    out << "  left restriction is the identity: " << yes_no(F.restrict_left() == id) << "\n";
    out << "  right restriction is the identity: " << yes_no(F.restrict_right() == id) << "\n";
    if (w) out << "  " << p.to_string() << "\n";
    values_[c.output] = p;
  } else if (v == "jouanolou") {
    DevicePresentation D = jouanolou_device(c.n, field_of(c.field));
    out << c.output << " = " << ring_string(*D.ring) << ", dim " << D.ring->dimension() << "\n";
    values_[c.output] = D.ring;
  }
}

void Session::run_assertion(const Assertion& a, std::ostream& out) {
  if (a.kind == Assertion::Kind::Valid) {
    const auto& p = lookup<QuadricPoint>(a.names[0], "point");
    if (!is_valid(p)) throw AssertionFailed(a.names[0] + " is not a point of the quadric");
    out << "ok\n";
    return;
  }
  auto it = values_.find(a.names[0]);
  if (it == values_.end()) throw Error(ErrorKind::ArityMismatch, "'" + a.names[0] + "' is not declared");
  bool equal = false;
  if (std::holds_alternative<Ideal>(it->second)) {
    equal = lookup<Ideal>(a.names[0], "ideal") == lookup<Ideal>(a.names[1], "ideal");
  } else if (std::holds_alternative<EulerSymbol>(it->second)) {
    equal = provably_equal(symbol_point(lookup<EulerSymbol>(a.names[0], "symbol")),
                           symbol_point(lookup<EulerSymbol>(a.names[1], "symbol")), ledger_)
                .equal;
  } else {
    equal = provably_equal(lookup<QuadricPoint>(a.names[0], "point"), lookup<QuadricPoint>(a.names[1], "point"),
                           ledger_)
                .equal;
  }
  if (!equal) throw AssertionFailed("equality not certified: " + a.names[0] + " and " + a.names[1]);
  out << "ok\n";
}

namespace {

int run_statements(const std::vector<Statement>& statements, const Options& options, std::ostream& out,
                   std::ostream& err) {
  Session session(options);
  for (const auto& s : statements) {
    try {
      session.execute(s, out);
    } catch (const AssertionFailed& e) {
      out.flush();
      err << "line " << s.line << ": assertion failed: " << e.what() << "\n";
      return kAssertionFailed;
    } catch (const std::exception& e) {
      out.flush();
      err << "line " << s.line << ": " << e.what() << "\n";
      return kConstructionFailed;
    }
  }
  return kOk;
}

}  // namespace

int check(std::string_view text, std::ostream& out, std::ostream& err) {
  try {
    std::vector<Statement> statements = parse_session(text);
    resolve(statements);
    out << statements.size() << " statements\n";
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailed;
  } catch (const Error& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailed;
  }
}

int run(std::string_view text, const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<Statement> statements;
  try {
    statements = parse_session(text);
    resolve(statements);
  } catch (const Error& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailed;
  }
  return run_statements(statements, options, out, err);
}

}  // namespace euler::cli
