#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "euler/cohomotopy.hpp"
#include "euler/segre.hpp"

namespace euler {

/// Generator (I, omega) of the Euler class group with ht I = n, or the zero
/// symbol: the unit ideal with an empty orientation.
struct EulerSymbol {
  Ideal ideal;
  std::vector<RingElement> a;  // empty for the zero symbol
  std::size_t n = 0;

  /// Checks ht I = n (HeightViolation) and the orientation (NotOriented).
  static EulerSymbol make(Ideal I, std::vector<RingElement> a);
  static EulerSymbol zero(const RingPtr& ring, std::size_t n);

  bool is_zero() const { return a.empty(); }
  const RingPtr& ring() const { return ideal.ring(); }
  OrientedIdeal oriented() const { return OrientedIdeal{ideal, a}; }
  std::string to_string() const;
};

/// sum_k coeff_k (I_k, omega_k) over one ring and one n.
struct EulerSum {
  RingPtr ring;
  std::size_t n = 0;
  std::vector<std::pair<long, EulerSymbol>> terms;

  EulerSum(RingPtr ring, std::size_t n) : ring(std::move(ring)), n(n) {}
  /// Throws RingMismatch / ArityMismatch for foreign symbols.
  EulerSum& add(long coeff, EulerSymbol symbol);
  std::string to_string() const;
};

struct UnimodularRow {
  std::vector<RingElement> entries;

  /// Throws Unimodularity unless the entries generate the unit ideal.
  static UnimodularRow make(std::vector<RingElement> entries);
  std::string to_string() const;
};

/// Id + lambda E_ij with 0-based i != j.
struct ElementaryFactor {
  std::size_t i = 0, j = 0;
  RingElement lambda;
};

struct ElementaryWord {
  std::vector<ElementaryFactor> factors;
};

/// sigma . a for a single factor: a_i += lambda a_j.
std::vector<RingElement> apply_factor(const ElementaryFactor& f, std::vector<RingElement> a);
/// sigma^{-t} . b: b_j -= lambda b_i.
std::vector<RingElement> apply_inverse_transpose(const ElementaryFactor& f, std::vector<RingElement> b);

/// Homotopy with its two representatives.
struct RelationWitness {
  QuadricPoint from;
  QuadricPoint to;
  Homotopy homotopy;
};

/// Complete intersections: (a T, 0, 0) from the zero point to (a, 0, 0). Requires
/// I = <a> (NotCompleteIntersection).
RelationWitness lift_witness(const EulerSymbol& S);
/// Elementary action of one factor: from (a, b, s) = segre_class(S) to
/// (sigma a, sigma^{-t} b, s) along sigma(T) = Id + lambda T E_ij.
RelationWitness elementary_witness(const EulerSymbol& S, const ElementaryFactor& f);
/// The symbol (I, sigma . omega).
EulerSymbol act(const EulerSymbol& S, const ElementaryWord& w);

/// (JK, (e_K)^2 omega_J + (e_J)^2 omega_K reduced modulo (JK)^2). Throws
/// NotComaximal.
EulerSymbol merge(const EulerSymbol& J, const EulerSymbol& K);
/// Induced orientations on the factors of I = JK (NotComaximal when J + K is
/// proper, HeightViolation when a factor is not of height n, NotMember when
/// JK != I).
std::pair<EulerSymbol, EulerSymbol> split(const EulerSymbol& I, const Ideal& J, const Ideal& K);

struct MovingEulerResult {
  Ideal K;
  std::vector<RingElement> f;
};

/// K and f with f in I cap K, f_i - a_i in I^2, I^2 + K = R, ht K >= n,
/// <f> = I cap K and dim(R/(J + K)) <= dim(R/J) - n for every avoid ideal J.
/// Candidates f = NF(a mod I^2) + eps with eps in I^2 (eps = 0 first). Throws
/// HeightViolation when ht I != n and MoveFailed when the attempts run out.
MovingEulerResult moving_euler(const OrientedIdeal& O, const std::vector<Ideal>& avoid, std::uint64_t seed,
                               unsigned attempt_cap = 200, unsigned degree_cap = 1);

/// One rewrite of reduce_to_single.
struct ReductionStep {
  enum class Kind { Negate, Separate, Merge, DropZero } kind;
  std::string description;
  std::vector<EulerSymbol> inputs;
  EulerSymbol output;
  /// Certificate for the step: the merged symbol whose complete-intersection homotopy
  /// shows input + partner = 0 (Negate, Separate), or the merge itself.
  std::vector<RelationWitness> witnesses;
};

struct ReductionResult {
  EulerSymbol symbol;
  std::vector<ReductionStep> steps;
};

struct ReductionOptions {
  std::uint64_t seed = 0;
  unsigned attempt_cap = 200;
  unsigned degree_cap = 1;
  /// Caller's certificate dim R <= 2n - 1; RangeViolation when false.
  bool in_range = true;
};

ReductionResult reduce_to_single(const EulerSum& S, const ReductionOptions& options = {});

/// Sum of Segre classes via compose (inverse for negative coefficients).
CohomotopyClass segre_hom(const EulerSum& S, const ComposeOptions& options = {});

struct WeakClass {
  std::vector<std::pair<Ideal, long>> cycles;
  long degree = 0;
};

/// Forgets orientations; degree = sum coeff dim_k R/I. NotZeroDimensional
/// for symbols with dim R/I > 0.
WeakClass weak_class(const EulerSum& S);

struct PhiResult {
  EulerSymbol symbol;
  UnimodularRow special_row;   // the row after the recorded moves
  ElementaryWord column_moves;  // factors applied to the input row
};

/// phi(a_1..a_{d+1}) = (<a_1..a_d>, a_{d+1} (a_1..a_d)) with d = |row| - 1,
/// after random elementary moves making <a_1..a_d> of height d. MoveFailed
/// when no special row is found.
PhiResult phi(const UnimodularRow& row, std::uint64_t seed = 0, unsigned attempt_cap = 200);

}  // namespace euler
