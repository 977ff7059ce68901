#include "sbr/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sbr/error.hpp"

namespace sbr {

namespace {

// r 2^l as an exact rational
Rational level_coordinate(const Rational& r, Level l) { return r.mul_pow2(l); }

}  // namespace

std::vector<Node> o_slice(const Rational& r, Level l) {
  const Rational t = level_coordinate(r, l);
  std::vector<Node> out;
  if (t.is_integer()) {
    out.emplace_back(t.numerator() - 1, l);
  } else {
    Int f = t.floor();
    out.emplace_back(f - 1, l);
    out.emplace_back(f, l);
  }
  return out;
}

std::vector<Node> c_slice(const Rational& r, Level l) {
  const Rational t = level_coordinate(r, l);
  std::vector<Node> out;
  if (t.is_integer()) {
    Int f = t.numerator();
    out.emplace_back(f - 2, l);
    out.emplace_back(f - 1, l);
    out.emplace_back(f, l);
  } else {
    Int f = t.floor();
    out.emplace_back(f - 1, l);
    out.emplace_back(f, l);
  }
  return out;
}

IdealTruncation truncate_ideal(IdealKind kind, const Rational& r, Level l0, Level l1) {
  if (l0 > l1) throw std::invalid_argument("truncate_ideal: level window is empty");
  IdealTruncation t;
  t.kind = kind;
  t.witness = r;
  t.level_lo = l0;
  t.level_hi = l1;
  for (Level l = l0; l <= l1; ++l) {
    auto slice = kind == IdealKind::open ? o_slice(r, l) : c_slice(r, l);
    t.nodes.insert(t.nodes.end(), slice.begin(), slice.end());
  }
  return t;
}

bool IdealTruncation::has(const Node& node) const {
  return std::binary_search(nodes.begin(), nodes.end(), node);
}

std::vector<Node> IdealTruncation::at_level(Level n) const {
  std::vector<Node> out;
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n,
                             [](const Node& a, Level lv) { return a.level() < lv; });
  for (; it != nodes.end() && it->level() == n; ++it) out.push_back(*it);
  return out;
}

bool CPropertyReport::all_passed() const {
  for (const auto& p : properties)
    if (!p.passed) return false;
  return true;
}

CPropertyReport check_c_properties(const IdealTruncation& t, Level depth_bound) {
  if (t.kind != IdealKind::closed)
    throw ContractViolation("check_c_properties: truncation is not of closed kind");
  if (depth_bound < 1 || t.level_hi - t.level_lo < depth_bound)
    throw ContractViolation("check_c_properties: window shallower than the depth bound");

  CPropertyReport report;
  report.depth_bound = depth_bound;
  auto& prop = report.properties;

  // 1: every node above the bottom level has a child in the set
  for (Level n = t.level_lo; n < t.level_hi && prop[0].passed; ++n) {
    for (const Node& node : t.at_level(n)) {
      auto ch = children(node);
      if (!t.has(ch[0]) && !t.has(ch[1]) && !t.has(ch[2])) {
        prop[0].passed = false;
        prop[0].note = "node " + node.str() + " has no child in the set";
        break;
      }
    }
  }
  if (prop[0].passed) prop[0].note = "every node above level " + std::to_string(t.level_hi) + " has a child";

  // 2: 2..3 adjacent nodes per level
  for (Level n = t.level_lo; n <= t.level_hi && prop[1].passed; ++n) {
    auto slice = t.at_level(n);
    if (slice.size() < 2 || slice.size() > 3) {
      prop[1].passed = false;
      prop[1].note = "level " + std::to_string(n) + " holds " + std::to_string(slice.size()) +
                     " nodes, expected 2 or 3";
      break;
    }
    for (std::size_t i = 1; i < slice.size(); ++i) {
      if (slice[i].index() != slice[i - 1].index() + 1) {
        prop[1].passed = false;
        prop[1].note = "level " + std::to_string(n) + " nodes are not adjacent";
        break;
      }
    }
  }
  if (prop[1].passed) prop[1].note = "each level holds 2 or 3 adjacent nodes";

  // 3: membership of rational witnesses is decidable, so the
  // double-negation form adds nothing checkable
  prop[2].note = "structurally satisfied: membership is decidable for rational witnesses";

  // 4: left or right child present
  for (Level n = t.level_lo; n < t.level_hi && prop[3].passed; ++n) {
    for (const Node& node : t.at_level(n)) {
      if (!t.has(child(node, Role::left)) && !t.has(child(node, Role::right))) {
        prop[3].passed = false;
        prop[3].note = "node " + node.str() + " has neither outer child in the set";
        break;
      }
    }
  }
  if (prop[3].passed) prop[3].note = "every node above the bottom level keeps an outer child";

  // 5: depth-bounded endpoint condition
  {
    long unresolved = 0;
    for (Level n = t.level_lo; n <= t.level_hi && prop[4].passed; ++n) {
      auto slice = t.at_level(n);
      if (slice.empty()) continue;
      const Level avail = t.level_hi - n;
      auto full_chain = [&](const Node& node, bool right) {
        for (Level i = 1; i <= avail; ++i)
          if (!t.has(right ? right_power(node, i) : left_power(node, i))) return false;
        return true;
      };
      for (const Node& node : slice) {
        const bool leftmost3 = slice.size() == 3 && node == slice.front();
        const bool rightmost3 = slice.size() == 3 && node == slice.back();
        if (t.witness == node.upper() && !leftmost3) {
          prop[4].passed = false;
          prop[4].note = "witness is the right endpoint of " + node.str() +
                         " but it is not the leftmost of three adjacent nodes";
          break;
        }
        if (t.witness == node.lower() && !rightmost3) {
          prop[4].passed = false;
          prop[4].note = "witness is the left endpoint of " + node.str() +
                         " but it is not the rightmost of three adjacent nodes";
          break;
        }
        if (leftmost3 && !full_chain(node, true)) {
          prop[4].passed = false;
          prop[4].note = "leftmost node " + node.str() + " lacks the full right-child chain";
          break;
        }
        if (rightmost3 && !full_chain(node, false)) {
          prop[4].passed = false;
          prop[4].note = "rightmost node " + node.str() + " lacks the full left-child chain";
          break;
        }
        if (avail >= depth_bound) {
          if (!leftmost3 && t.witness != node.upper() && full_chain(node, true)) ++unresolved;
          if (!rightmost3 && t.witness != node.lower() && full_chain(node, false)) ++unresolved;
        }
      }
    }
    if (prop[4].passed)
      prop[4].note = "endpoint configurations verified at depth bound " + std::to_string(depth_bound) +
                     "; " + std::to_string(unresolved) + " extreme chains unresolved at this depth";
  }

  // 6: joins of members at in-window levels are members
  for (std::size_t i = 0; i < t.nodes.size() && prop[5].passed; ++i) {
    for (std::size_t j = i + 1; j < t.nodes.size(); ++j) {
      auto joined = join(t.nodes[i], t.nodes[j]);
      if (!joined || joined->level() > t.level_hi || joined->level() < t.level_lo) continue;
      if (!t.has(*joined)) {
        prop[5].passed = false;
        prop[5].note = "join " + joined->str() + " of " + t.nodes[i].str() + " and " +
                       t.nodes[j].str() + " is missing";
        break;
      }
    }
  }
  if (prop[5].passed) prop[5].note = "closed under joins inside the window";

  return report;
}

bool check_o_ideal(const IdealTruncation& t) {
  if (t.kind != IdealKind::open)
    throw ContractViolation("check_o_ideal: truncation is not of open kind");

  // downward closure under superset: both parents of every non-top node
  for (const Node& node : t.nodes) {
    if (node.level() <= t.level_lo) continue;
    for (const auto& [parent, role] : parents(node)) {
      (void)role;
      if (!t.has(parent)) return false;
    }
  }

  // join closure inside the window
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < t.nodes.size(); ++j) {
      auto joined = join(t.nodes[i], t.nodes[j]);
      if (!joined || joined->level() > t.level_hi) continue;
      if (!t.has(*joined)) return false;
    }
  }

  // nonextreme descendant, or an extreme chain that the window cannot
  // yet resolve
  for (const Node& node : t.nodes) {
    const Level n = node.level();
    if (n >= t.level_hi) continue;
    bool found = false;
    for (Level m = n + 1; m <= t.level_hi && !found; ++m) {
      for (const Node& d : t.at_level(m)) {
        if (!contains(node, d)) continue;
        if (d == left_power(node, m - n) || d == right_power(node, m - n)) continue;
        found = true;
        break;
      }
    }
    if (found) continue;
    auto chain = [&](bool right) {
      for (Level i = 1; i <= t.level_hi - n; ++i)
        if (!t.has(right ? right_power(node, i) : left_power(node, i))) return false;
      return true;
    };
    if (!chain(true) && !chain(false)) return false;
  }
  return true;
}

bool CauchySubset::has(const Node& node) const {
  return std::binary_search(nodes.begin(), nodes.end(), node);
}

Level CauchySubset::min_level() const {
  if (nodes.empty()) throw ContractViolation("CauchySubset: empty node set");
  return nodes.front().level();
}

bool cauchy_check(const CauchySubset& s) {
  if (s.nodes.empty()) return false;
  const Level lo = s.min_level();

  // a node at every level up to max_level
  {
    std::set<Level> levels;
    for (const Node& n : s.nodes) levels.insert(n.level());
    for (Level l = lo; l <= s.max_level; ++l)
      if (!levels.count(l)) return false;
    if (*levels.rbegin() > s.max_level) return false;
  }

  // downward closure under superset within the window
  for (const Node& node : s.nodes) {
    if (node.level() <= lo) continue;
    for (const auto& [parent, role] : parents(node)) {
      (void)role;
      if (!s.has(parent)) return false;
    }
  }

  // declared convergence clauses: left endpoints beyond the declared
  // level stay strictly within 2^-p of one another
  for (const auto& [p, l] : s.modulus) {
    bool any = false;
    Rational emin, emax;
    for (const Node& node : s.nodes) {
      if (node.level() <= l) continue;
      Rational e = node.lower();
      if (!any) {
        emin = emax = e;
        any = true;
      } else {
        emin = min(emin, e);
        emax = max(emax, e);
      }
    }
    if (any && emax - emin >= Rational::pow2(-p)) return false;
  }
  return true;
}

bool is_unblocked(const CauchySubset& s) {
  for (const Node& node : s.nodes) {
    if (node.level() >= s.max_level) continue;
    auto ch = children(node);
    if (!s.has(ch[0]) && !s.has(ch[1]) && !s.has(ch[2])) return false;
  }
  return true;
}

RationalInterval limit_bounds(const CauchySubset& s, Index p) {
  auto it = s.modulus.find(p);
  if (it == s.modulus.end())
    throw ContractViolation("limit_bounds: no declared modulus at p = " + std::to_string(p));
  const Level l = it->second;
  const Node* pick = nullptr;
  for (const Node& node : s.nodes) {
    if (node.level() > l) {
      pick = &node;
      break;
    }
  }
  if (!pick)
    throw ContractViolation("limit_bounds: no node beyond level " + std::to_string(l));
  const Rational mid = pick->midpoint();
  const Rational w = Rational::pow2(-p) + Rational::pow2(-l);
  return RationalInterval{mid - w, mid + w};
}

namespace {

CauchySubset downset_of_sequence(const RationalSequence& c, Level depth) {
  if (depth < 1) throw std::invalid_argument("cauchy_from_sequence: depth must be >= 1");
  std::set<Node> acc;
  for (Level n = 1; n <= depth; ++n) {
    const Int k = c(n).mul_pow2(n).floor();
    acc.insert(Node(k, n));
    // supersets at levels m < n: j in [ cdiv(k+2, 2^(n-m)) - 2, fdiv(k, 2^(n-m)) ]
    for (Level m = n - 1; m >= 1; --m) {
      Int shift;
      mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(n - m));
      Int hi, lo;
      mpz_fdiv_q(hi.get_mpz_t(), k.get_mpz_t(), shift.get_mpz_t());
      Int k2 = k + 2;
      mpz_cdiv_q(lo.get_mpz_t(), k2.get_mpz_t(), shift.get_mpz_t());
      lo -= 2;
      for (Int j = lo; j <= hi; ++j) acc.insert(Node(j, m));
    }
  }
  CauchySubset s;
  s.nodes.assign(acc.begin(), acc.end());
  s.max_level = depth;
  return s;
}

}  // namespace

CauchySubset cauchy_from_sequence(const RationalSequence& c, Level depth) {
  return downset_of_sequence(c, depth);
}

CauchySubset cauchy_from_sequence(const RationalSequence& c, Level depth, const Modulus& mu) {
  CauchySubset s = downset_of_sequence(c, depth);
  for (Index p = 0; p <= depth && p + 2 < 62; ++p) {
    Index i = Index(1) << (p + 2);
    s.modulus[p] = std::max<Level>(mu(i), p + 3);
  }
  return s;
}

std::map<Index, Node> o_enumerate(const Rational& r, const Node& J, Index steps) {
  if (!(J.lower() < r && r < J.upper()))
    throw ContractViolation("o_enumerate: r is not strictly inside J");

  // siblings: all children of J's parents
  Int base_lo = J.index(), base_hi = J.index();
  for (const auto& [parent, role] : parents(J)) {
    (void)role;
    base_lo = std::min(base_lo, Int(2 * parent.index()));
    base_hi = std::max(base_hi, Int(2 * parent.index() + 2));
  }
  const Int span = base_hi - base_lo + 2;  // family at depth d: k in [base_lo 2^d, (base_hi+2) 2^d - 2]

  auto family_node = [&](Index a) {
    Level d = 0;
    Int count = span - 1;  // span 2^d - 1 nodes at depth d
    Int rest(a);
    while (rest >= count) {
      rest -= count;
      ++d;
      count = count * 2 + 1;
    }
    Int shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(d));
    return Node(base_lo * shift + rest, J.level() + d);
  };

  std::map<Index, Node> out;
  Index diag = 0, offset = 0;  // pair (a, b) = (diag - offset, offset)
  for (Index i = 1; i <= steps; ++i) {
    const Index a = diag - offset;
    Node candidate = family_node(a);
    const Rational radius(1, i);
    if (candidate.lower() < r - radius && r + radius < candidate.upper())
      out.emplace(i, candidate);
    if (++offset > diag) {
      ++diag;
      offset = 0;
    }
  }
  return out;
}

std::string serialize(const IdealTruncation& t) {
  std::string out = "kind=";
  out += t.kind == IdealKind::open ? 'O' : 'C';
  out += " r=" + t.witness.str();
  out += " levels=" + std::to_string(t.level_lo) + ".." + std::to_string(t.level_hi) + "\n";
  for (const Node& n : t.nodes) out += n.str() + "\n";
  return out;
}

}  // namespace sbr
