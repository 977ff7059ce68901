#pragma once

#include <functional>
#include <memory>
#include <string>

#include "sbr/node.hpp"

namespace sbr {

/// Precision-indexed approximation of a real: A(k) must be a rational
/// within 2^-k of the represented value, for every integer k, and must
/// be deterministic.
using ApproximationOracle = std::function<Rational(Level)>;

/// A signed-bit number: digits a_i in {-1,0,+1} for indices i >= start(),
/// zero below, representing sum_i a_i 2^-i.  Equivalently a path through
/// the pseudotree beginning at the midpoint-0 node on level start()-1;
/// the level-l path node has midpoint approx(l), and
/// |value - approx(l)| <= 2^-l for every l.
///
/// Digits come from an internal generator and are memoized left to
/// right under a lock, so queries are observationally pure and safe
/// from multiple threads.
class SignedBitNumber {
 public:
  /// step(i, m) must return digit a_i given the midpoint m of the path
  /// node after the digits below i.  Called once per index, in order.
  static SignedBitNumber from_steps(Level start, std::function<Digit(Level, const Rational&)> step);

  Level start() const;

  /// a_i; zero for i < start().
  Digit digit(Level i) const;

  /// Partial sum m_l through index l; zero for l < start().
  /// Always within 2^-l of the represented value.
  Rational approx(Level l) const;

  /// The level-l node with midpoint approx(l).
  Node path_node(Level l) const;

  /// approx as an ApproximationOracle.
  ApproximationOracle oracle() const;

 private:
  struct State;
  explicit SignedBitNumber(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

/// Greedy signed-bit expansion of a rational.  The start index is the
/// largest n with |r| <= 2^-n (0 for r = 0); each digit minimizes the
/// distance of the new midpoint to r, ties broken toward digit 0.
SignedBitNumber from_rational(const Rational& r);

/// Path extraction from an approximation oracle.  Maintains the
/// strengthened invariant |value - m_l| <= (3/4) 2^-l by reading
/// A(l+4) before choosing the digit at index l+1; the start index is
/// found by decrementing n from 0 until |A(n+4)| <= 2^-(n+1).
SignedBitNumber from_oracle(const ApproximationOracle& a);

char digit_char(Digit d);  // '-', '0', '+'

/// Truncated text form, bit-exact:
///   start=<n>
///   <digits a_n .. a_depth as -/0/+>
///   depth=<l>
std::string serialize(const SignedBitNumber& x, Level depth);

}  // namespace sbr
