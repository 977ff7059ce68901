#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbr/node.hpp"
#include "sbr/sequences.hpp"

namespace sbr {

enum class IdealKind { open, closed };  // O_r / C_r

/// A window of an ideal of a rational witness: all nodes between two
/// levels whose open (kind open) or closed (kind closed) interval
/// contains the witness.  Nodes are kept sorted by (level, k).
struct IdealTruncation {
  IdealKind kind = IdealKind::open;
  Rational witness;
  Level level_lo = 0;
  Level level_hi = 0;
  std::vector<Node> nodes;

  bool has(const Node& node) const;
  std::vector<Node> at_level(Level n) const;
};

/// Level-l nodes whose open interval contains r; 1 node when r 2^l is an
/// integer, else 2 adjacent nodes.
std::vector<Node> o_slice(const Rational& r, Level l);

/// Level-l nodes whose closed interval contains r; 3 adjacent nodes when
/// r 2^l is an integer, else 2.  Always a superset of o_slice(r, l).
std::vector<Node> c_slice(const Rational& r, Level l);

IdealTruncation truncate_ideal(IdealKind kind, const Rational& r, Level l0, Level l1);

/// Executable forms of the six closure conditions of a closed ideal,
/// checked on a truncation window.
///   1  every node above the bottom level has a child in the set
///   2  each level holds 2 or 3 adjacent nodes (2..3 is forced for the
///      closed slices of every real, and the floor makes single
///      deletions at odd-k nodes visible)
///   3  membership is decidable for rational witnesses, so the
///      double-negation condition carries no extra content; reported
///      as structurally satisfied
///   4  for every node above the bottom level, the left or the right
///      child is in the set
///   5  depth-bounded endpoint condition: if the witness equals a node
///      endpoint, that node is the leftmost/rightmost of exactly three
///      adjacent nodes; leftmost-of-three forces the full right-child
///      chain down to the window bottom (mirrored for rightmost);
///      extreme chains that merely reach the window bottom without an
///      endpoint witness are counted as unresolved at this depth, not
///      failures
///   6  joins of members, when they exist at a level inside the window,
///      are members
struct CPropertyReport {
  struct Property {
    bool passed = true;
    std::string note;
  };
  std::array<Property, 6> properties;
  Level depth_bound = 0;
  bool all_passed() const;
};

CPropertyReport check_c_properties(const IdealTruncation& t, Level depth_bound);

/// Open-ideal conditions on a truncation window: downward closure under
/// superset, join closure (for joins at in-window levels), and a
/// nonextreme descendant for every node above the bottom level — a node
/// whose pure left/right chain persists to the window bottom counts as
/// unresolved rather than failing, since deeper levels would decide it.
bool check_o_ideal(const IdealTruncation& t);

/// Finite window of a Cauchy subset: a downset with a node at every
/// level up to max_level, plus declared convergence data: for each
/// listed p, all left endpoints of nodes at levels beyond modulus[p]
/// lie within 2^-p of one another.
struct CauchySubset {
  std::vector<Node> nodes;  // sorted by (level, k)
  Level max_level = 0;
  std::map<Index, Level> modulus;

  bool has(const Node& node) const;
  Level min_level() const;
};

bool cauchy_check(const CauchySubset& s);

/// Every node above max_level has a child in the set.
bool is_unblocked(const CauchySubset& s);

struct RationalInterval {
  Rational lo, hi;
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  Rational width() const { return hi - lo; }
};

/// Interval of width 2 (2^-p + 2^-l) around the midpoint of the first
/// node beyond level l = modulus[p]; the limit of the subset lies in it.
/// Throws ContractViolation when p is undeclared or no node lies beyond.
RationalInterval limit_bounds(const CauchySubset& s, Index p);

/// The downset generated by the nodes J_n = (floor(c_n 2^n), n) for
/// n = 1..depth, within levels >= 1.  The overload taking a modulus of
/// convergence for c attaches the induced subset modulus
/// p -> max(mu(2^(p+2)), p+3).
CauchySubset cauchy_from_sequence(const RationalSequence& c, Level depth);
CauchySubset cauchy_from_sequence(const RationalSequence& c, Level depth, const Modulus& mu);

/// The proof-style enumeration of the part of O_r at J's level and
/// beyond: a fixed diagonal pairing walks (node, repetition) pairs over
/// J's siblings and their descendants, defining step i at the node J_i
/// exactly when [r - 1/i, r + 1/i] fits inside it.  Requires r strictly
/// inside J.
std::map<Index, Node> o_enumerate(const Rational& r, const Node& J, Index steps);

/// Bit-exact text form: header `kind=<O|C> r=<num>/<den> levels=<l0>..<l1>`
/// followed by one node per line, sorted by (level, k).
std::string serialize(const IdealTruncation& t);

}  // namespace sbr
