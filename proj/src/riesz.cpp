#include "sbr/riesz.hpp"

#include <algorithm>
#include <stdexcept>

#include "sbr/error.hpp"

namespace sbr {

RieszElement::RieszElement(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("RieszElement: dimension must be positive");
}

RieszElement RieszElement::constant(std::size_t d, const Rational& value) {
  return RieszElement(std::vector<Rational>(d, value));
}

std::string RieszElement::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + "]";
}

namespace {

void require_same_dim(const RieszElement& x, const RieszElement& y) {
  if (x.dimension() != y.dimension())
    throw std::invalid_argument("Riesz operation on elements of different dimension");
}

template <typename F>
RieszElement pointwise(const RieszElement& x, const RieszElement& y, F f) {
  require_same_dim(x, y);
  std::vector<Rational> out;
  out.reserve(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) out.push_back(f(x[i], y[i]));
  return RieszElement(std::move(out));
}

}  // namespace

RieszElement vee(const RieszElement& x, const RieszElement& y) {
  return pointwise(x, y, [](const Rational& a, const Rational& b) { return max(a, b); });
}

RieszElement wedge(const RieszElement& x, const RieszElement& y) {
  return pointwise(x, y, [](const Rational& a, const Rational& b) { return min(a, b); });
}

RieszElement plus(const RieszElement& x, const RieszElement& y) {
  return pointwise(x, y, [](const Rational& a, const Rational& b) { return a + b; });
}

RieszElement minus(const RieszElement& x, const RieszElement& y) {
  return pointwise(x, y, [](const Rational& a, const Rational& b) { return a - b; });
}

RieszElement scale(const Rational& q, const RieszElement& x) {
  std::vector<Rational> out;
  out.reserve(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) out.push_back(q * x[i]);
  return RieszElement(std::move(out));
}

RieszElement negate(const RieszElement& x) { return scale(Rational(-1), x); }

RieszElement pos_part(const RieszElement& x) {
  return vee(x, RieszElement::constant(x.dimension(), Rational(0)));
}

RieszElement neg_part(const RieszElement& x) { return pos_part(negate(x)); }

RieszElement abs_val(const RieszElement& x) { return plus(pos_part(x), neg_part(x)); }

bool pointwise_leq(const RieszElement& x, const RieszElement& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.dimension(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Rational sup_cut(const RieszElement& x) {
  Rational m = x[0];
  for (std::size_t i = 1; i < x.dimension(); ++i) m = max(m, x[i]);
  return m;
}

bool pos(const RieszElement& x) { return sup_cut(x) > Rational(0); }

Rational seminorm(const RieszElement& x) { return sup_cut(abs_val(x)); }

RieszElement elem_in_interval(const RieszElement& x, const Node& interval) {
  const std::size_t d = x.dimension();
  return wedge(minus(x, RieszElement::constant(d, interval.lower())),
               minus(RieszElement::constant(d, interval.upper()), x));
}

void ChiAssignment::assign(const RieszElement& x, const Node& node) {
  for (auto& [elem, nd] : entries_) {
    if (elem == x) {
      nd = node;
      return;
    }
  }
  entries_.emplace_back(x, node);
}

std::optional<Node> ChiAssignment::node_for(const RieszElement& x) const {
  for (const auto& [elem, nd] : entries_)
    if (elem == x) return nd;
  return std::nullopt;
}

bool chi_member(const ChiAssignment& assignment) {
  if (assignment.size() == 0) return true;
  std::optional<RieszElement> acc;
  for (const auto& [elem, node] : assignment.entries()) {
    RieszElement w = elem_in_interval(elem, node);
    acc = acc ? wedge(*acc, w) : w;
  }
  return pos(*acc);
}

bool chi_member(const std::vector<RieszElement>& Y, const ChiAssignment& assignment) {
  ChiAssignment restricted;
  for (const RieszElement& y : Y) {
    auto node = assignment.node_for(y);
    if (!node) throw ContractViolation("chi_member: assignment does not cover " + y.str());
    restricted.assign(y, *node);
  }
  return chi_member(restricted);
}

namespace {

bool chi_contains(const std::vector<ChiAssignment>& chi, const ChiAssignment& target) {
  for (const ChiAssignment& c : chi) {
    if (c.size() != target.size()) continue;
    bool same = true;
    for (const auto& [elem, node] : target.entries()) {
      auto found = c.node_for(elem);
      if (!found || *found != node) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return false;
}

}  // namespace

bool well_formed_check(const std::vector<ChiAssignment>& chi, const std::vector<RieszElement>& X) {
  // clause 1: X is exactly the union of the domains
  for (const RieszElement& x : X) {
    bool covered = false;
    for (const ChiAssignment& c : chi) {
      if (c.node_for(x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  for (const ChiAssignment& c : chi) {
    for (const auto& [elem, node] : c.entries()) {
      (void)node;
      if (std::find(X.begin(), X.end(), elem) == X.end()) return false;
    }
  }

  // node universe for weakening steps
  std::vector<Node> universe;
  for (const ChiAssignment& c : chi)
    for (const auto& [elem, node] : c.entries()) {
      (void)elem;
      if (std::find(universe.begin(), universe.end(), node) == universe.end())
        universe.push_back(node);
    }

  // clause 2, finite reading: closed under domain restriction and under
  // weakening one entry to an in-universe strict superset
  for (const ChiAssignment& c : chi) {
    const auto& entries = c.entries();
    const std::size_t m = entries.size();
    for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << m); ++mask) {
      ChiAssignment sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t(1) << i)) sub.assign(entries[i].first, entries[i].second);
      if (!chi_contains(chi, sub)) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (const Node& wider : universe) {
        if (wider == entries[i].second || !contains(wider, entries[i].second)) continue;
        ChiAssignment weakened = c;
        weakened.assign(entries[i].first, wider);
        if (!chi_contains(chi, weakened)) return false;
      }
    }
  }
  return true;
}

std::optional<ChiAssignment> extendible_check(const ChiAssignment& base, const RieszElement& u, Level n) {
  const auto existing = base.node_for(u);
  if (existing && existing->level() >= n) return base;

  std::vector<Node> candidates;
  for (std::size_t j = 0; j < u.dimension(); ++j) {
    for (const Node& node : o_slice(u[j], n)) {
      if (existing && !contains(*existing, node)) continue;  // refinement must descend
      if (std::find(candidates.begin(), candidates.end(), node) == candidates.end())
        candidates.push_back(node);
    }
  }
  for (const Node& node : candidates) {
    ChiAssignment extended = base;
    extended.assign(u, node);
    if (chi_member(extended)) return extended;
  }
  return std::nullopt;
}

InducedFamily induced_family(std::size_t j, const std::vector<RieszElement>& X, Level depth) {
  if (X.empty()) throw std::invalid_argument("induced_family: X must be nonempty");
  if (j < 1 || j > X.front().dimension())
    throw std::invalid_argument("induced_family: coordinate out of range");
  InducedFamily out;
  out.reserve(X.size());
  for (const RieszElement& x : X)
    out.emplace_back(x, truncate_ideal(IdealKind::open, x[j - 1], 1, depth));
  return out;
}

bool HomReport::all_passed() const {
  if (!precondition_ok) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

const IdealTruncation* family_find(const InducedFamily& family, const RieszElement& x) {
  for (const auto& [elem, trunc] : family)
    if (elem == x) return &trunc;
  return nullptr;
}

// midpoint of the deepest node (smallest k when two share the level)
Rational family_value(const IdealTruncation& t) {
  return t.at_level(t.level_hi).front().midpoint();
}

}  // namespace

HomReport reconstruct_hom(const InducedFamily& family,
                          const std::vector<std::pair<RieszElement, RieszElement>>& probes,
                          const std::vector<std::pair<Rational, RieszElement>>& scale_probes,
                          const Rational& eps) {
  HomReport report;
  if (family.empty()) throw std::invalid_argument("reconstruct_hom: empty family");
  Level depth = family.front().second.level_hi;
  for (const auto& [elem, trunc] : family) {
    (void)elem;
    depth = std::min(depth, trunc.level_hi);
  }
  if (!(Rational::pow2(-depth) < eps * Rational(1, 4))) {
    report.precondition_ok = false;
    report.precondition_note = "truncation depth " + std::to_string(depth) +
                               " does not satisfy 2^-depth < eps/4 for eps = " + eps.str();
    return report;
  }

  auto value_of = [&](const RieszElement& x) -> std::optional<Rational> {
    const IdealTruncation* t = family_find(family, x);
    if (!t) return std::nullopt;
    return family_value(*t);
  };

  auto add_check = [&](const std::string& what, bool ok) {
    report.checks.push_back({what, ok});
  };

  // unit law
  {
    const std::size_t d = family.front().first.dimension();
    auto fu = value_of(RieszElement::unit(d));
    if (!fu)
      add_check("unit: element not in family", false);
    else
      add_check("unit: |f(1) - 1| <= eps", (*fu - Rational(1)).abs() <= eps);
  }

  for (const auto& [x, y] : probes) {
    auto fx = value_of(x), fy = value_of(y);
    auto fsum = value_of(plus(x, y));
    if (!fx || !fy || !fsum) {
      add_check("additivity: probe element missing from family", false);
      continue;
    }
    bool ok = (*fsum - *fx - *fy).abs() <= eps;
    add_check("additivity: |f(x+y) - f(x) - f(y)| <= eps for x=" + x.str() + " y=" + y.str(), ok);

    auto fmeet = value_of(wedge(x, y));
    if (!fmeet) {
      add_check("wedge: probe element missing from family", false);
      continue;
    }
    bool wok = (*fmeet - min(*fx, *fy)).abs() <= eps;
    add_check("wedge: |f(x^y) - min(f x, f y)| <= eps for x=" + x.str() + " y=" + y.str(), wok);
  }

  for (const auto& [q, x] : scale_probes) {
    auto fx = value_of(x);
    auto fqx = value_of(scale(q, x));
    if (!fx || !fqx) {
      add_check("scaling: probe element missing from family", false);
      continue;
    }
    bool ok = (*fqx - q * *fx).abs() <= eps * (Rational(1) + q.abs());
    add_check("scaling: |f(qx) - q f(x)| <= eps (1+|q|) for q=" + q.str() + " x=" + x.str(), ok);
  }

  return report;
}

}  // namespace sbr
