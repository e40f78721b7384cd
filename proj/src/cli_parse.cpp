#include <algorithm>
#include <cctype>
#include <map>

#include "euler/cli.hpp"
#include "euler/errors.hpp"

namespace euler::cli {

namespace {

bool exprs_equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!expr_equal(*a[i], *b[i])) return false;
  return true;
}

bool terms_equal(const std::vector<SymbolTerm>& a, const std::vector<SymbolTerm>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].coeff != b[i].coeff || a[i].name != b[i].name || a[i].inline_orientation != b[i].inline_orientation)
      return false;
    if (!exprs_equal(a[i].orientation, b[i].orientation)) return false;
  }
  return true;
}

struct BodyEqual {
  bool operator()(const RingDecl& a, const RingDecl& b) const {
    return a.name == b.name && a.field == b.field && a.variables == b.variables &&
           exprs_equal(a.relations, b.relations);
  }
  bool operator()(const IdealDecl& a, const IdealDecl& b) const {
    return a.name == b.name && a.ring == b.ring && exprs_equal(a.generators, b.generators);
  }
  bool operator()(const PointDecl& a, const PointDecl& b) const {
    return a.name == b.name && a.ring == b.ring && exprs_equal(a.a, b.a) && exprs_equal(a.b, b.b) &&
           expr_equal(*a.s, *b.s);
  }
  bool operator()(const RowDecl& a, const RowDecl& b) const {
    return a.name == b.name && a.ring == b.ring && exprs_equal(a.entries, b.entries);
  }
  bool operator()(const Command& a, const Command& b) const {
    return a.verb == b.verb && a.output == b.output && a.inputs == b.inputs && a.avoid == b.avoid &&
           terms_equal(a.terms, b.terms) && a.n == b.n && a.field == b.field;
  }
  bool operator()(const Assertion& a, const Assertion& b) const { return a.kind == b.kind && a.names == b.names; }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

// Field names: QQ or F followed by digits without a leading zero.
bool valid_field(const std::string& f) {
  if (f == "QQ") return true;
  if (f.size() < 2 || f[0] != 'F' || f[1] == '0') return false;
  return std::all_of(f.begin() + 1, f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string field_token(Cursor& cur) {
  cur.skip_space();
  const int line = cur.line(), column = cur.column();
  std::string f = cur.identifier();
  if (!valid_field(f)) throw ParseError(line, column, "field QQ or Fp");
  return f;
}

std::vector<ExprPtr> expr_list(Cursor& cur, char open, char close) {
  std::vector<ExprPtr> out;
  cur.expect(open);
  if (cur.accept(close)) return out;
  do {
    out.push_back(parse_expression(cur));
  } while (cur.accept(','));
  cur.expect(close);
  return out;
}

std::vector<std::string> name_list(Cursor& cur) {
  std::vector<std::string> out;
  cur.expect('(');
  do {
    out.push_back(cur.identifier());
  } while (cur.accept(','));
  cur.expect(')');
  return out;
}

void expect_word(Cursor& cur, std::string_view w) {
  if (!cur.accept(w)) cur.fail("'" + std::string(w) + "'");
}

std::string output_name(Cursor& cur) {
  std::string name = cur.identifier();
  cur.expect('=');
  return name;
}

unsigned long small_integer(Cursor& cur) {
  mpz_class v = cur.integer();
  if (v > 1000000) cur.fail("integer below 10^6");
  return v.get_ui();
}

SymbolTerm symbol_atom(Cursor& cur) {
  SymbolTerm t;
  if (cur.accept('(')) {
    t.name = cur.identifier();
    cur.expect(',');
    t.orientation = expr_list(cur, '[', ']');
    cur.expect(')');
  } else {
    t.name = cur.identifier();
    t.inline_orientation = false;
  }
  return t;
}

SymbolTerm signed_term(Cursor& cur, long sign) {
  long coeff = 1;
  if (cur.peek_digit()) {
    mpz_class v = cur.integer();
    if (v > 1000000) cur.fail("coefficient below 10^6");
    coeff = static_cast<long>(v.get_ui());
    cur.expect('*');
  }
  SymbolTerm t = symbol_atom(cur);
  t.coeff = sign * coeff;
  return t;
}

std::vector<SymbolTerm> symbol_sum(Cursor& cur) {
  std::vector<SymbolTerm> out;
  out.push_back(signed_term(cur, cur.accept('-') ? -1 : 1));
  for (;;) {
    if (cur.accept('+')) {
      out.push_back(signed_term(cur, 1));
    } else if (cur.accept('-')) {
      out.push_back(signed_term(cur, -1));
    } else {
      return out;
    }
  }
}

Command parse_command(Cursor& cur, const std::string& verb) {
  Command c;
  c.verb = verb;
  if (verb == "validate") {
    c.inputs.push_back(cur.identifier());
  } else if (verb == "equal?") {
    c.inputs.push_back(cur.identifier());
    c.inputs.push_back(cur.identifier());
  } else if (verb == "ideal-of" || verb == "inverse" || verb == "phi") {
    c.output = output_name(cur);
    c.inputs.push_back(cur.identifier());
  } else if (verb == "segre") {
    c.output = output_name(cur);
    if (cur.peek() != '(') cur.fail("'(' IDEAL ', [' orientation '])'");
    c.terms.push_back(symbol_atom(cur));
  } else if (verb == "move") {
    c.output = output_name(cur);
    c.inputs.push_back(cur.identifier());
    if (cur.accept("avoid")) c.avoid = name_list(cur);
  } else if (verb == "compose") {
    c.output = output_name(cur);
    c.inputs.push_back(cur.identifier());
    cur.expect('*');
    c.inputs.push_back(cur.identifier());
  } else if (verb == "euler-reduce") {
    c.output = output_name(cur);
    c.terms = symbol_sum(cur);
  } else if (verb == "weak-class") {
    c.terms = symbol_sum(cur);
  } else if (verb == "fold-map" || verb == "jouanolou") {
    c.output = output_name(cur);
    c.n = small_integer(cur);
    expect_word(cur, "over");
    c.field = field_token(cur);
  }
  return c;
}

StatementBody parse_body(Cursor& cur) {
  if (!cur.peek_identifier()) cur.fail("statement keyword");
  Cursor before = cur;
  std::string head = cur.word();
  if (head == "ring") {
    RingDecl d;
    d.name = output_name(cur);
    d.field = field_token(cur);
    cur.expect('[');
    do {
      d.variables.push_back(cur.identifier());
    } while (cur.accept(','));
    cur.expect(']');
    if (cur.accept('/')) d.relations = expr_list(cur, '(', ')');
    return d;
  }
  if (head == "ideal" || head == "row") {
    std::string name = output_name(cur);
    std::vector<ExprPtr> xs = expr_list(cur, '(', ')');
    expect_word(cur, "in");
    std::string ring = cur.identifier();
    if (head == "ideal") return IdealDecl{name, std::move(xs), ring};
    if (xs.empty()) cur.fail("nonempty row");
    return RowDecl{name, std::move(xs), ring};
  }
  if (head == "point") {
    PointDecl d;
    d.name = cur.identifier();
    cur.expect(':');
    Cursor at_type = cur;
    at_type.skip_space();
    std::string type = cur.identifier();
    unsigned long twice_n = 0;
    bool ok = type.size() > 1 && type[0] == 'Q' && type[1] != '0' &&
              std::all_of(type.begin() + 1, type.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (ok && type.size() < 8) twice_n = std::stoul(type.substr(1));
    if (!ok || twice_n == 0 || twice_n % 2 != 0) at_type.fail("quadric type Q2n");
    cur.expect('(');
    d.ring = cur.identifier();
    cur.expect(')');
    cur.expect('=');
    cur.expect('(');
    Cursor at_a = cur;
    at_a.skip_space();
    d.a = expr_list(cur, '[', ']');
    cur.expect(',');
    d.b = expr_list(cur, '[', ']');
    cur.expect(',');
    d.s = parse_expression(cur);
    cur.expect(')');
    if (d.a.size() != twice_n / 2 || d.b.size() != twice_n / 2)
      at_a.fail(std::to_string(twice_n / 2) + " entries in a and b for " + type);
    return d;
  }
  if (head == "assert") {
    Assertion a;
    if (cur.accept("equal")) {
      a.kind = Assertion::Kind::Equal;
      a.names.push_back(cur.identifier());
      a.names.push_back(cur.identifier());
    } else if (cur.accept("valid")) {
      a.kind = Assertion::Kind::Valid;
      a.names.push_back(cur.identifier());
    } else {
      cur.fail("'equal' or 'valid'");
    }
    return a;
  }
  const auto& vs = verbs();
  if (std::find(vs.begin(), vs.end(), head) == vs.end()) before.fail("statement keyword or command verb");
  return parse_command(cur, head);
}

// A statement ends at ';', at a line break or at the end of the text.
void terminate(Cursor& cur) {
  if (cur.accept(';')) return;
  if (cur.at_end() || cur.line_break_ahead()) return;
  cur.fail("';' or end of line");
}

Statement parse_one(Cursor& cur) {
  cur.skip_space();
  Statement s;
  s.line = cur.line();
  s.column = cur.column();
  s.body = parse_body(cur);
  terminate(cur);
  return s;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

std::string join(const std::vector<ExprPtr>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + expr_to_string(*xs[i]);
  return out;
}

std::string atom_string(const SymbolTerm& t) {
  if (!t.inline_orientation) return t.name;
  return "(" + t.name + ", [" + join(t.orientation) + "])";
}

std::string sum_string(const std::vector<SymbolTerm>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const long c = terms[i].coeff;
    const long m = c < 0 ? -c : c;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m != 1) out += std::to_string(m) + "*";
    out += atom_string(terms[i]);
  }
  return out;
}

struct Printer {
  std::string operator()(const RingDecl& d) const {
    std::string out = "ring " + d.name + " = " + d.field + "[" + join(d.variables) + "]";
    if (!d.relations.empty()) out += " / (" + join(d.relations) + ")";
    return out;
  }
  std::string operator()(const IdealDecl& d) const {
    return "ideal " + d.name + " = (" + join(d.generators) + ") in " + d.ring;
  }
  std::string operator()(const PointDecl& d) const {
    return "point " + d.name + " : Q" + std::to_string(2 * d.a.size()) + "(" + d.ring + ") = ([" + join(d.a) +
           "], [" + join(d.b) + "], " + expr_to_string(*d.s) + ")";
  }
  std::string operator()(const RowDecl& d) const {
    return "row " + d.name + " = (" + join(d.entries) + ") in " + d.ring;
  }
  std::string operator()(const Assertion& a) const {
    return std::string("assert ") + (a.kind == Assertion::Kind::Equal ? "equal " : "valid ") +
           (a.names.size() == 2 ? a.names[0] + " " + a.names[1] : a.names.at(0));
  }
  std::string operator()(const Command& c) const {
    std::string out = c.verb + " ";
    if (!c.output.empty()) out += c.output + " = ";
    if (c.verb == "validate" || c.verb == "ideal-of" || c.verb == "inverse" || c.verb == "phi") return out + c.inputs.at(0);
    if (c.verb == "equal?") return out + c.inputs.at(0) + " " + c.inputs.at(1);
    if (c.verb == "compose") return out + c.inputs.at(0) + " * " + c.inputs.at(1);
    if (c.verb == "move") {
      out += c.inputs.at(0);
      if (!c.avoid.empty()) out += " avoid (" + join(c.avoid) + ")";
      return out;
    }
    if (c.verb == "segre") return out + atom_string(c.terms.at(0));
    if (c.verb == "euler-reduce" || c.verb == "weak-class") return out + sum_string(c.terms);
    return out + std::to_string(c.n) + " over " + c.field;
  }
};

}  // namespace

bool operator==(const Statement& a, const Statement& b) { return std::visit(BodyEqual{}, a.body, b.body); }

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> all = {"validate", "ideal-of", "segre",     "move",  "compose",
                                               "inverse",  "equal?",   "euler-reduce", "phi", "weak-class",
                                               "fold-map", "jouanolou"};
  return all;
}

Statement parse_statement(std::string_view text) {
  Cursor cur(text);
  Statement s = parse_one(cur);
  if (!cur.at_end()) cur.fail("end of statement");
  return s;
}

std::vector<Statement> parse_session(std::string_view text) {
  Cursor cur(text);
  std::vector<Statement> out;
  while (!cur.at_end()) out.push_back(parse_one(cur));
  return out;
}

std::string print(const Statement& s) { return std::visit(Printer{}, s.body) + ";"; }

namespace {

enum class Kind { Ring, Ideal, Point, Row, Symbol };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Ring: return "ring";
    case Kind::Ideal: return "ideal";
    case Kind::Point: return "point";
    case Kind::Row: return "row";
    case Kind::Symbol: return "symbol";
  }
  return "";
}

class Resolver {
 public:
  void statement(const Statement& s) {
    at_ = &s;
    std::visit([this](const auto& b) { visit(b); }, s.body);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(at_->line, at_->column, what); }

  void need(const std::string& name, Kind k) const {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) fail(std::string("declared ") + kind_name(k) + " '" + name + "'");
    if (it->second != k) fail(std::string(kind_name(k)) + " for '" + name + "', not a " + kind_name(it->second));
  }

  Kind kind_of(const std::string& name) const {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) fail("declared name '" + name + "'");
    return it->second;
  }

  void terms(const std::vector<SymbolTerm>& ts) const {
    for (const auto& t : ts) need(t.name, t.inline_orientation ? Kind::Ideal : Kind::Symbol);
  }

  void visit(const RingDecl& d) { kinds_[d.name] = Kind::Ring; }
  void visit(const IdealDecl& d) {
    need(d.ring, Kind::Ring);
    kinds_[d.name] = Kind::Ideal;
  }
  void visit(const PointDecl& d) {
    need(d.ring, Kind::Ring);
    kinds_[d.name] = Kind::Point;
  }
  void visit(const RowDecl& d) {
    need(d.ring, Kind::Ring);
    kinds_[d.name] = Kind::Row;
  }
  void visit(const Assertion& a) {
    if (a.kind == Assertion::Kind::Valid) return need(a.names[0], Kind::Point);
    pair(a.names[0], a.names[1]);
  }
  void pair(const std::string& x, const std::string& y) const {
    Kind k = kind_of(x);
    if (k == Kind::Ring || k == Kind::Row) fail("point, ideal or symbol for '" + x + "'");
    need(y, k);
  }
  void visit(const Command& c) {
    const std::string& v = c.verb;
    if (v == "validate") {
      need(c.inputs[0], Kind::Point);
    } else if (v == "equal?") {
      pair(c.inputs[0], c.inputs[1]);
    } else if (v == "ideal-of") {
      need(c.inputs[0], Kind::Point);
      kinds_[c.output] = Kind::Ideal;
    } else if (v == "inverse" || v == "compose" || v == "move") {
      for (const auto& x : c.inputs) need(x, Kind::Point);
      for (const auto& x : c.avoid) need(x, Kind::Ideal);
      kinds_[c.output] = Kind::Point;
    } else if (v == "phi") {
      need(c.inputs[0], Kind::Row);
      kinds_[c.output] = Kind::Symbol;
    } else if (v == "segre") {
      terms(c.terms);
      kinds_[c.output] = Kind::Point;
    } else if (v == "euler-reduce") {
      terms(c.terms);
      kinds_[c.output] = Kind::Symbol;
    } else if (v == "weak-class") {
      terms(c.terms);
    } else if (v == "fold-map") {
      kinds_[c.output] = Kind::Point;
    } else if (v == "jouanolou") {
      kinds_[c.output] = Kind::Ring;
    }
  }

  const Statement* at_ = nullptr;
  std::map<std::string, Kind> kinds_;
};

}  // namespace

void resolve(const std::vector<Statement>& statements) {
  Resolver r;
  for (const auto& s : statements) r.statement(s);
}

}  // namespace euler::cli
