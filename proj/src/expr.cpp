#include "euler/expr.hpp"

#include <cctype>

#include "euler/errors.hpp"

namespace euler {

ExprPtr Expr::make_number(mpq_class v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = std::move(v);
  return e;
}

ExprPtr Expr::make_variable(std::string n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(n);
  return e;
}

ExprPtr Expr::make_binary(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = {std::move(a), std::move(b)};
  return e;
}

ExprPtr Expr::make_neg(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->args = {std::move(a)};
  return e;
}

ExprPtr Expr::make_pow(ExprPtr a, unsigned exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->exponent = exponent;
  e->args = {std::move(a)};
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Variable: return a.name == b.name;
    case Expr::Kind::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    default: break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!expr_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

namespace {

// Binding strength used by the printer: sum < product < unary < power < atom.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number: return e.number.get_den() == 1 && sgn(e.number) >= 0 ? 5 : 2;
    case Expr::Kind::Variable: return 5;
  }
  return 5;
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = expr_to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string expr_to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: {
      // Negative literals only arise from direct construction; print them
      // as a negation so the round trip is exact.
      if (sgn(e.number) < 0) {
        mpq_class m = -e.number;
        auto inner = Expr::make_number(m);
        return "-" + wrap(*inner, 3);
      }
      return e.number.get_str();
    }
    case Expr::Kind::Variable: return e.name;
    case Expr::Kind::Add: return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case Expr::Kind::Sub: return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case Expr::Kind::Mul: return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case Expr::Kind::Div: return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case Expr::Kind::Neg: return "-" + wrap(*e.args[0], 3);
    case Expr::Kind::Pow: return wrap(*e.args[0], 5) + "^" + std::to_string(e.exponent);
  }
  return "";
}

void Cursor::skip_space() {
  if (pos_ != skipped_to_) token_end_line_ = line_;
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') get();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      get();
    } else {
      break;
    }
  }
  skipped_to_ = pos_;
}

bool Cursor::line_break_ahead() {
  skip_space();
  return line_ > token_end_line_;
}

bool Cursor::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Cursor::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

char Cursor::peek_at(std::size_t offset) {
  skip_space();
  return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
}

char Cursor::get() {
  char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

bool Cursor::accept(char c) {
  if (peek() == c) {
    get();
    return true;
  }
  return false;
}

bool Cursor::accept(std::string_view word) {
  skip_space();
  if (text_.substr(pos_, word.size()) != word) return false;
  std::size_t end = pos_ + word.size();
  bool word_like = std::isalpha(static_cast<unsigned char>(word.back())) != 0;
  if (word_like && end < text_.size()) {
    char next = text_[end];
    if (std::isalnum(static_cast<unsigned char>(next)) || next == '_' || next == '-' || next == '?')
      return false;
  }
  for (std::size_t i = 0; i < word.size(); ++i) get();
  return true;
}

void Cursor::expect(char c) {
  if (!accept(c)) fail(std::string("'") + c + "'");
}

bool Cursor::peek_identifier() {
  char c = peek();
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool Cursor::peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

std::string Cursor::identifier() {
  if (!peek_identifier()) fail("identifier");
  std::string out;
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
      out.push_back(get());
    } else {
      break;
    }
  }
  return out;
}

std::string Cursor::word() {
  std::string out = identifier();
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '-' && pos_ + 1 < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_ + 1]))) {
      out.push_back(get());
      out += identifier();
    } else if (c == '?') {
      out.push_back(get());
      break;
    } else {
      break;
    }
  }
  return out;
}

mpz_class Cursor::integer() {
  if (!peek_digit()) fail("integer");
  std::string digits;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
    digits.push_back(get());
  return mpz_class(digits);
}

void Cursor::fail(const std::string& expected) const {
  throw ParseError(line_, column_, expected);
}

namespace {

ExprPtr parse_sum(Cursor& cur);

ExprPtr parse_atom(Cursor& cur) {
  if (cur.accept('(')) {
    ExprPtr inner = parse_sum(cur);
    cur.expect(')');
    return inner;
  }
  if (cur.peek_digit()) return Expr::make_number(mpq_class(cur.integer()));
  if (cur.peek_identifier()) return Expr::make_variable(cur.identifier());
  cur.fail("number, variable or '('");
}

ExprPtr parse_power(Cursor& cur) {
  ExprPtr base = parse_atom(cur);
  if (cur.accept('^')) {
    mpz_class e = cur.integer();
    if (e > 65535) cur.fail("exponent below 65536");
    return Expr::make_pow(std::move(base), static_cast<unsigned>(e.get_ui()));
  }
  return base;
}

ExprPtr parse_unary(Cursor& cur) {
  if (cur.accept('-')) return Expr::make_neg(parse_unary(cur));
  return parse_power(cur);
}

ExprPtr parse_product(Cursor& cur) {
  ExprPtr lhs = parse_unary(cur);
  for (;;) {
    if (cur.accept('*')) {
      lhs = Expr::make_binary(Expr::Kind::Mul, lhs, parse_unary(cur));
    } else if (cur.peek() == '/' ) {
      cur.get();
      lhs = Expr::make_binary(Expr::Kind::Div, lhs, parse_unary(cur));
    } else {
      return lhs;
    }
  }
}

ExprPtr parse_sum(Cursor& cur) {
  ExprPtr lhs = parse_product(cur);
  for (;;) {
    if (cur.accept('+')) {
      lhs = Expr::make_binary(Expr::Kind::Add, lhs, parse_product(cur));
    } else if (cur.accept('-')) {
      lhs = Expr::make_binary(Expr::Kind::Sub, lhs, parse_product(cur));
    } else {
      return lhs;
    }
  }
}

}  // namespace

ExprPtr parse_expression(Cursor& cur) { return parse_sum(cur); }

ExprPtr parse_expression(std::string_view text) {
  Cursor cur(text);
  ExprPtr e = parse_sum(cur);
  if (!cur.at_end()) cur.fail("end of expression");
  return e;
}

}  // namespace euler
