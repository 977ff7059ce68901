#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbr/rational.hpp"

namespace sbr {

using Level = std::int64_t;

/// Signed binary digit, -1 / 0 / +1.
enum class Digit : int { minus = -1, zero = 0, plus = 1 };

inline int digit_value(Digit d) { return static_cast<int>(d); }
Digit digit_from_value(int v);

/// Child slot of a pseudotree node: left, middle, right.
enum class Role { left, middle, right };

Role role_from_digit(Digit d);
Digit digit_from_role(Role r);

/// A vertex of the ternary pseudotree: the open dyadic interval
/// (k/2^n, (k+2)/2^n).  The level n is unbounded in both directions;
/// there is no root.  Radius is 2^-n, length 2^(1-n), midpoint (k+1)/2^n.
class Node {
 public:
  Node(Int k, Level n) : k_(std::move(k)), n_(n) {}

  const Int& index() const { return k_; }
  Level level() const { return n_; }

  Rational lower() const { return Rational(k_).mul_pow2(-n_); }
  Rational upper() const { return Rational(Int(k_ + 2)).mul_pow2(-n_); }
  Rational midpoint() const { return Rational(Int(k_ + 1)).mul_pow2(-n_); }
  Rational radius() const { return Rational::pow2(-n_); }

  friend bool operator==(const Node& a, const Node& b) { return a.n_ == b.n_ && a.k_ == b.k_; }
  friend bool operator!=(const Node& a, const Node& b) { return !(a == b); }
  /// Ordering by (level, k); used for sorted node sets and serialization.
  friend bool operator<(const Node& a, const Node& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.k_ < b.k_;
  }

  std::string str() const;  // "(k,n)"
  static std::optional<Node> parse(std::string_view text);

 private:
  Int k_;
  Level n_;
};

Node child(const Node& node, Role role);
std::array<Node, 3> children(const Node& node);

/// The parents of a node, each tagged with the slot the node occupies
/// under it.  Odd k has the single middle parent ((k-1)/2, n-1); even k
/// has the left parent (k/2, n-1) and the right parent ((k-2)/2, n-1).
std::vector<std::pair<Node, Role>> parents(const Node& node);

/// Exact open-interval containment: inner a subset of outer.
bool contains(const Node& outer, const Node& inner);

/// The node whose interval is the intersection of a and b, when the
/// intersection is a node of the pseudotree; empty when the intersection
/// is empty, a single point, or not of node form.
std::optional<Node> join(const Node& a, const Node& b);

Node left_power(const Node& node, Level i);   // i-fold left child
Node right_power(const Node& node, Level i);  // i-fold right child

/// { left^i node, right^i node : 1 <= i <= depth }.
std::vector<Node> extreme_descendants(const Node& node, Level depth);

}  // namespace sbr
