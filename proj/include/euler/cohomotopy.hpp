#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "euler/ideal.hpp"
#include "euler/quadric.hpp"
#include "euler/segre.hpp"

namespace euler {

/// Why two points are connected.
enum class WitnessKind {
  Homotopy,        // a registered naive homotopy (either direction)
  IdealCriterion,  // same ideal, a - a' in I^2, both generate I/I^2
  UnitIdeals,      // both vanishing ideals are the unit ideal
  Identical,
};

std::string_view to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind;
  QuadricPoint from;
  QuadricPoint to;
  std::optional<Homotopy> homotopy;  // set for WitnessKind::Homotopy
  std::string note;

  std::string to_string() const;
};

/// Append-only list of registered homotopies (and the points they were
/// produced for). Values, never shared mutable state.
class WitnessLedger {
 public:
  void add_homotopy(const Homotopy& h, std::string note);
  void append(const WitnessLedger& other);
  const std::vector<Witness>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Witness> entries_;
};

/// Checks the ideal criterion for u and w: equal vanishing ideals I,
/// a_i - a'_i in I^2 and <a> + I^2 = I = <a'> + I^2.
std::optional<Witness> ideal_criterion(const QuadricPoint& u, const QuadricPoint& w);

struct EqualityVerdict {
  bool equal = false;
  std::vector<Witness> chain;  // from u to w when equal
};

/// Semi-decision of equality of classes: searches for a chain through the
/// ledger's homotopies, the base bridge (0; e_1; 0) ~ (0; e_1; 1) and the
/// implicit edges (ideal criterion, unit ideals, identical points). Never
/// reports inequality; `equal == false` means unknown. Throws RingMismatch
/// and ArityMismatch.
EqualityVerdict provably_equal(const QuadricPoint& u, const QuadricPoint& w, const WitnessLedger& ledger = {});

struct MoveConstraints {
  std::vector<Ideal> avoid;
  std::uint64_t rng_seed = 0;
  unsigned degree_cap = 2;
  unsigned attempt_cap = 200;
  /// Try mu = 0 first.
  bool allow_zero = true;
};

struct MoveResult {
  QuadricPoint moved;
  std::vector<RingElement> mu;
  Homotopy homotopy;  // from the input (T = 0) to `moved` (T = 1)
  /// Avoid ideals whose dim(R/J) exceeds n - 1, i.e. outside the hypotheses
  /// under which a move is guaranteed to exist.
  std::vector<std::string> warnings;
};

/// (a + mu(1 - s)^2, b(1 - mu.b^t), s + mu.b^t (1 - s)).
QuadricPoint move_with(const QuadricPoint& v, const std::vector<RingElement>& mu);
/// The same formula with mu replaced by T mu over R[T].
Homotopy move_homotopy(const QuadricPoint& v, const std::vector<RingElement>& mu);
/// Empty when ht(N) >= n and N + J = R for every avoid ideal J, where N is
/// the vanishing ideal of `moved`; otherwise the first failed condition.
std::optional<std::string> move_failure(const QuadricPoint& moved, const std::vector<Ideal>& avoid);

/// Randomized search for mu; mu = 0 first when allowed. Throws MoveFailed
/// naming the last candidate and the condition it failed.
MoveResult move(const QuadricPoint& v, const MoveConstraints& constraints);

struct ComposeOptions {
  std::uint64_t seed = 0;
  unsigned degree_cap = 2;
  unsigned attempt_cap = 200;
};

struct ComposeResult {
  QuadricPoint h;
  /// The operands in the order used (canonical order of their printed form),
  /// after an eventual move of the first one.
  QuadricPoint first, second;
  std::optional<MoveResult> move;
  ComaximalityWitness crt;  // e in I(first), e' in I(second)
  std::vector<RingElement> c;
  IdempotentLift lift_first, lift_second;
  WitnessLedger ledger;  // the move homotopy, when one was needed
};

/// The composition tau(u, w): moves the canonically first operand when the
/// vanishing ideals are not comaximal, builds c = e'^2 a + e^2 a' and
/// returns (c, x, s s') with x from the idempotent lifts. Verifies validity,
/// I(h) = I(u) I(w) and <c> + I(h)^2 = I(h); on a failure retries once with a
/// fresh move, then throws ConstructionFailed.
ComposeResult compose(const QuadricPoint& u, const QuadricPoint& w, const ComposeOptions& options = {});

struct InverseResult {
  QuadricPoint point;
  Ideal K;
  std::vector<RingElement> f;  // <f> = I cap K, f_i - a_i in I^2
  /// (f T, 0, 0) from the zero point to (f, 0, 0): with the ideal criterion
  /// and the base bridge it certifies compose(v, point) ~ base point.
  WitnessLedger ledger;
};

/// Inverse class: segre_class(K, f) for the residual ideal K of moving_euler.
/// Requires I(v) of height n or the unit ideal (HeightViolation otherwise).
InverseResult inverse(const QuadricPoint& v, std::uint64_t seed = 0, unsigned attempt_cap = 200,
                      unsigned degree_cap = 1);

/// A representative with the homotopies that connect every representative
/// seen so far. `in_range` records the caller's certificate dim R <= 2n - 2,
/// under which the classes form an abelian group.
struct CohomotopyClass {
  QuadricPoint representative;
  WitnessLedger ledger;
  bool in_range = false;

  static CohomotopyClass of(QuadricPoint v);
  static CohomotopyClass base(const RingPtr& ring, std::size_t n);
};

/// dim R <= 2n - 2.
bool in_group_range(const RingPtr& ring, std::size_t n);

/// Class of compose(x, y); the ledgers and the move homotopy are merged and
/// in_range is the conjunction.
CohomotopyClass add(const CohomotopyClass& x, const CohomotopyClass& y, const ComposeOptions& options = {});
/// Class of inverse(x.representative), ledger extended by its certificate.
CohomotopyClass negate(const CohomotopyClass& x, std::uint64_t seed = 0);
EqualityVerdict provably_equal(const CohomotopyClass& x, const CohomotopyClass& y);

}  // namespace euler
