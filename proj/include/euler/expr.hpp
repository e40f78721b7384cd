#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace euler {

/// Unevaluated polynomial expression as written by a user. Parsing needs no
/// ring; evaluation against a ring happens in PolyRing::from_expr.
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Number;
  mpq_class number;          // Number
  std::string name;          // Variable
  unsigned exponent = 0;     // Pow
  std::vector<std::shared_ptr<const Expr>> args;

  static std::shared_ptr<const Expr> make_number(mpq_class v);
  static std::shared_ptr<const Expr> make_variable(std::string n);
  static std::shared_ptr<const Expr> make_binary(Kind k, std::shared_ptr<const Expr> a,
                                                 std::shared_ptr<const Expr> b);
  static std::shared_ptr<const Expr> make_neg(std::shared_ptr<const Expr> a);
  static std::shared_ptr<const Expr> make_pow(std::shared_ptr<const Expr> a, unsigned e);
};

using ExprPtr = std::shared_ptr<const Expr>;

bool expr_equal(const Expr& a, const Expr& b);

/// Prints with the minimum parentheses needed for parse_expression to
/// rebuild an identical tree.
std::string expr_to_string(const Expr& e);

/// Character cursor shared by the expression and statement parsers; tracks
/// line and column for error reports.
class Cursor {
 public:
  explicit Cursor(std::string_view text, int line = 1, int column = 1)
      : text_(text), line_(line), column_(column) {}

  void skip_space();
  bool at_end();
  char peek();
  char peek_at(std::size_t offset);
  char get();
  bool accept(char c);
  bool accept(std::string_view word);
  void expect(char c);
  std::string identifier();  // [A-Za-z_][A-Za-z0-9_']*
  std::string word();        // identifier that may also contain '-' and end in '?'
  bool peek_identifier();
  bool peek_digit();
  mpz_class integer();

  /// True when a line break separates the last token from the next one.
  bool line_break_ahead();

  [[noreturn]] void fail(const std::string& expected) const;

  int line() const { return line_; }
  int column() const { return column_; }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
  std::size_t skipped_to_ = static_cast<std::size_t>(-1);
  int token_end_line_ = 0;
};

/// Grammar: sum := ['-'] product {('+'|'-') product};
/// product := unary {('*'|'/') unary}; unary := '-' unary | power;
/// power := atom ['^' integer]; atom := number | identifier | '(' sum ')'.
ExprPtr parse_expression(Cursor& cur);
ExprPtr parse_expression(std::string_view text);

}  // namespace euler
