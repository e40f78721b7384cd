#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "euler/cohomotopy.hpp"
#include "euler/euler.hpp"
#include "euler/expr.hpp"

namespace euler::cli {

// Session grammar, one statement per line or ';'-terminated, '#' comments:
//
//   ring A = QQ[x, y] / (x^2 + y^2 - 1);      FIELD is QQ or Fp, p an odd prime
//   ideal I = (x, y) in A;
//   point v : Q4(A) = ([x, y], [0, 0], 0);     Q2n fixes n
//   row r = (x, y, 1) in A;
//   validate v;                 ideal-of I = v;
//   segre v = (I, [x, y]);      move m = v avoid (I, J);
//   compose h = v * w;          inverse u = v;
//   equal? v w;                 phi S = r;
//   euler-reduce S = (I, [x, y]) - 2*(J, [y, x]) + T;
//   weak-class (I, [x, y]) + (J, [x - 1, y]);
//   fold-map F = 1 over QQ;     jouanolou D = 2 over F5;
//   assert equal v w;           assert valid v;

/// c * (IDEAL, [orientation]) or c * SYMBOL.
struct SymbolTerm {
  long coeff = 1;
  std::string name;                  // ideal name, or symbol name when `inline_orientation` is false
  bool inline_orientation = true;
  std::vector<ExprPtr> orientation;  // inline form only
};

struct RingDecl {
  std::string name;
  std::string field;  // "QQ" or "F<p>"
  std::vector<std::string> variables;
  std::vector<ExprPtr> relations;
};

struct IdealDecl {
  std::string name;
  std::vector<ExprPtr> generators;
  std::string ring;
};

struct PointDecl {
  std::string name;
  std::string ring;
  std::vector<ExprPtr> a, b;  // n = a.size(), declared as Q{2n}
  ExprPtr s;
};

struct RowDecl {
  std::string name;
  std::vector<ExprPtr> entries;
  std::string ring;
};

struct Command {
  std::string verb;
  std::string output;               // empty for validate, equal?, weak-class
  std::vector<std::string> inputs;  // point / ideal / row names
  std::vector<std::string> avoid;   // move only
  std::vector<SymbolTerm> terms;    // segre, euler-reduce, weak-class
  unsigned long n = 0;              // fold-map, jouanolou
  std::string field;                // fold-map, jouanolou
};

struct Assertion {
  enum class Kind { Equal, Valid } kind = Kind::Valid;
  std::vector<std::string> names;
};

using StatementBody = std::variant<RingDecl, IdealDecl, PointDecl, RowDecl, Command, Assertion>;

struct Statement {
  StatementBody body;
  int line = 1, column = 1;  // position of the first token; not part of equality
};

bool operator==(const Statement& a, const Statement& b);
inline bool operator!=(const Statement& a, const Statement& b) { return !(a == b); }

/// All verbs accepted by `parse_statement`.
const std::vector<std::string>& verbs();

/// Parses exactly one statement (the trailing ';' is optional). Throws
/// ParseError with the line and column of the offending token.
Statement parse_statement(std::string_view text);
/// Parses a whole session. Name references are not resolved here.
std::vector<Statement> parse_session(std::string_view text);
/// Canonical form, always ';'-terminated; parse_statement(print(s)) == s.
std::string print(const Statement& s);

/// Checks that every reference names an earlier declaration of the right
/// kind (ParseError at the referencing statement otherwise).
void resolve(const std::vector<Statement>& statements);

enum class OrderChoice { DegRevLex, Lex };

struct Options {
  std::uint64_t seed = 0;
  unsigned degree_cap = 2;
  unsigned attempts = 200;
  bool witnesses = false;
  OrderChoice order = OrderChoice::DegRevLex;
};

/// Exit statuses of a run.
enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kParseFailed = 2, kConstructionFailed = 3 };

/// Values bound in a session.
using Value = std::variant<RingPtr, Ideal, QuadricPoint, UnimodularRow, EulerSymbol>;

/// Executes statements one at a time, keeping the declared values and every
/// homotopy produced so far. Statement k draws its randomness from
/// seed.fork(k), so transcripts depend only on (session, options).
class Session {
 public:
  explicit Session(Options options) : options_(options) {}

  /// Writes the transcript block of `s` to `out`. Throws Error for module
  /// failures and AssertionFailed for failed assertions.
  void execute(const Statement& s, std::ostream& out);

  const WitnessLedger& ledger() const { return ledger_; }
  const std::map<std::string, Value>& values() const { return values_; }

 private:
  template <class T>
  const T& lookup(const std::string& name, const char* kind) const;
  RingPtr make_ring(const RingDecl& d) const;
  EulerSum make_sum(const std::vector<SymbolTerm>& terms) const;
  void run_command(const Command& c, std::ostream& out);
  void run_assertion(const Assertion& a, std::ostream& out);

  Options options_;
  std::uint64_t counter_ = 0;
  std::uint64_t seed_ = 0;  // seed of the running command
  std::map<std::string, Value> values_;
  WitnessLedger ledger_;
};

/// Thrown by Session::execute for a failed assertion.
class AssertionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses, resolves and executes `text`; transcript to `out`, diagnostics to
/// `err`. Returns an ExitCode.
int run(std::string_view text, const Options& options, std::ostream& out, std::ostream& err);
/// Parse and resolve only.
int check(std::string_view text, std::ostream& out, std::ostream& err);

}  // namespace euler::cli
