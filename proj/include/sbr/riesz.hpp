#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbr/ideals.hpp"
#include "sbr/node.hpp"

namespace sbr {

/// Element of the lattice-ordered rational vector space Q^d with
/// pointwise order; the unit is the all-ones vector.
class RieszElement {
 public:
  explicit RieszElement(std::vector<Rational> coords);

  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  static RieszElement constant(std::size_t d, const Rational& value);
  static RieszElement unit(std::size_t d) { return constant(d, Rational(1)); }

  friend bool operator==(const RieszElement& a, const RieszElement& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const RieszElement& a, const RieszElement& b) { return !(a == b); }

  std::string str() const;  // "[q1,q2,...,qd]"

 private:
  std::vector<Rational> coords_;
};

RieszElement vee(const RieszElement& x, const RieszElement& y);    // pointwise max
RieszElement wedge(const RieszElement& x, const RieszElement& y);  // pointwise min
RieszElement plus(const RieszElement& x, const RieszElement& y);
RieszElement minus(const RieszElement& x, const RieszElement& y);
RieszElement scale(const Rational& q, const RieszElement& x);
RieszElement negate(const RieszElement& x);
RieszElement pos_part(const RieszElement& x);  // x vee 0
RieszElement neg_part(const RieszElement& x);  // (-x) vee 0
RieszElement abs_val(const RieszElement& x);   // pos_part + neg_part

bool pointwise_leq(const RieszElement& x, const RieszElement& y);

/// Infimum of the upper cut { q in Q : x < q }, i.e. the maximum
/// coordinate.  The cut is located over Q^d, so this is exact.
Rational sup_cut(const RieszElement& x);

/// Pos(x): some positive rational lies below the whole upper cut,
/// i.e. the maximum coordinate is positive.
bool pos(const RieszElement& x);

/// sup_cut(|x|); a norm on Q^d (archimedean: zero only at zero).
Rational seminorm(const RieszElement& x);

/// The element (x - p) wedge (q - x) for the node interval (p, q);
/// positive exactly where a coordinate of x lies strictly inside.
RieszElement elem_in_interval(const RieszElement& x, const Node& interval);

/// A finite assignment of pseudotree nodes to elements, compared by
/// exact coordinate equality.
class ChiAssignment {
 public:
  ChiAssignment() = default;

  void assign(const RieszElement& x, const Node& node);  // insert or replace
  std::optional<Node> node_for(const RieszElement& x) const;
  const std::vector<std::pair<RieszElement, Node>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<RieszElement, Node>> entries_;
};

/// Membership in the signed-bit representation X_T:
/// Pos(wedge over the domain of (y in I_y)).  The empty assignment is
/// a member (empty wedge taken positive).
bool chi_member(const ChiAssignment& assignment);

/// Overload checking that the assignment covers Y before testing.
bool chi_member(const std::vector<RieszElement>& Y, const ChiAssignment& assignment);

/// The two well-formedness clauses on finite data: the domains of chi
/// cover X, and chi is closed downwards.  Literal downward closure is
/// unsatisfiable by a finite set (ancestor chains never end), so the
/// finite reading is: closed under domain restriction, and under
/// weakening a single entry to any strict-superset node that occurs
/// somewhere in chi.
bool well_formed_check(const std::vector<ChiAssignment>& chi, const std::vector<RieszElement>& X);

/// Searches X_T for an assignment extending `base` with u assigned a
/// node at level >= n (level exactly n is searched).  Candidates are the
/// per-coordinate slice nodes of u at that level, filtered to
/// descendants of the existing entry when u is already assigned; over
/// Q^d this candidate set is complete, because Pos of a wedge means some
/// coordinate lies strictly inside every window, and any value strictly
/// inside an interval has a slice node at each deeper level that stays
/// inside it.
std::optional<ChiAssignment> extendible_check(const ChiAssignment& base, const RieszElement& u, Level n);

using InducedFamily = std::vector<std::pair<RieszElement, IdealTruncation>>;

/// The open-ideal family induced by the coordinate projection f = (.)_j
/// (1-based j): x -> truncation of O_{x_j} over levels 1..depth.  Every
/// selection of one node per element from these truncations is a member
/// of X_T.
InducedFamily induced_family(std::size_t j, const std::vector<RieszElement>& X, Level depth);

/// Reads a homomorphism back off a truncated o-ideal family
/// (f(x) = midpoint of the deepest node for x) and checks the
/// homomorphism laws at tolerance eps:
///   |f(x+y) - f(x) - f(y)| <= eps          per probe pair
///   |f(1) - 1|             <= eps
///   |f(x wedge y) - min(f x, f y)| <= eps  per probe pair
///   |f(q x) - q f(x)|      <= eps (1+|q|)  per scale probe
/// Requires the truncation depth n to satisfy 2^-n < eps/4.
struct HomReport {
  struct Check {
    std::string description;
    bool passed = false;
  };
  bool precondition_ok = true;
  std::string precondition_note;
  std::vector<Check> checks;
  bool all_passed() const;
};

HomReport reconstruct_hom(const InducedFamily& family,
                          const std::vector<std::pair<RieszElement, RieszElement>>& probes,
                          const std::vector<std::pair<Rational, RieszElement>>& scale_probes,
                          const Rational& eps);

}  // namespace sbr
