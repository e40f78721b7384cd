#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace euler {

inline constexpr std::size_t kMaxVars = 32;

/// Dense exponent vector with a cached total degree. Unused trailing slots
/// stay zero, so whole-array comparisons are valid for any variable count.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, unsigned power = 1);

  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) on the divisor side: returns this / other.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_;
  std::uint32_t degree_ = 0;
};

enum class OrderKind { Lex, DegRevLex, Block };

/// Monomial order on a fixed number of variables. Block orders compare the
/// first `block` variables by degrevlex and break ties by degrevlex on the
/// remaining ones; they are elimination orders for the first block.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars) { return {OrderKind::Lex, nvars, 0}; }
  static MonomialOrder degrevlex(std::size_t nvars) { return {OrderKind::DegRevLex, nvars, 0}; }
  static MonomialOrder block(std::size_t nvars, std::size_t first) {
    return {OrderKind::Block, nvars, first};
  }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(OrderKind k, std::size_t n, std::size_t b) : kind_(k), nvars_(n), block_(b) {}

  static int drl(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi);

  OrderKind kind_;
  std::size_t nvars_;
  std::size_t block_;
};

}  // namespace euler

template <>
struct std::hash<euler::Monomial> {
  std::size_t operator()(const euler::Monomial& m) const noexcept { return m.hash(); }
};
