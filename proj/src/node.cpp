#include "sbr/node.hpp"

#include <stdexcept>

namespace sbr {

Digit digit_from_value(int v) {
  switch (v) {
    case -1: return Digit::minus;
    case 0: return Digit::zero;
    case 1: return Digit::plus;
    default: throw std::invalid_argument("digit must be -1, 0, or 1");
  }
}

Role role_from_digit(Digit d) {
  switch (d) {
    case Digit::minus: return Role::left;
    case Digit::zero: return Role::middle;
    default: return Role::right;
  }
}

Digit digit_from_role(Role r) {
  switch (r) {
    case Role::left: return Digit::minus;
    case Role::middle: return Digit::zero;
    default: return Digit::plus;
  }
}

Node child(const Node& node, Role role) {
  const Int& k = node.index();
  switch (role) {
    case Role::left: return Node(2 * k, node.level() + 1);
    case Role::middle: return Node(2 * k + 1, node.level() + 1);
    default: return Node(2 * k + 2, node.level() + 1);
  }
}

std::array<Node, 3> children(const Node& node) {
  return {child(node, Role::left), child(node, Role::middle), child(node, Role::right)};
}

std::vector<std::pair<Node, Role>> parents(const Node& node) {
  const Int& k = node.index();
  Level up = node.level() - 1;
  std::vector<std::pair<Node, Role>> out;
  if (mpz_odd_p(k.get_mpz_t())) {
    out.emplace_back(Node((k - 1) / 2, up), Role::middle);
  } else {
    out.emplace_back(Node(k / 2, up), Role::left);
    out.emplace_back(Node((k - 2) / 2, up), Role::right);
  }
  return out;
}

bool contains(const Node& outer, const Node& inner) {
  Level d = inner.level() - outer.level();
  if (d < 0) return false;
  if (d == 0) return outer.index() == inner.index();
  // scale the outer endpoints to the inner level
  Int shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(d));
  Int lo = outer.index() * shift;
  Int hi = (outer.index() + 2) * shift;
  return inner.index() >= lo && inner.index() + 2 <= hi;
}

std::optional<Node> join(const Node& a, const Node& b) {
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;
  // endpoints in units of 2^-M, M the deeper level
  Level m = std::max(a.level(), b.level());
  auto scaled = [m](const Node& n) {
    Int shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(m - n.level()));
    return std::pair<Int, Int>(n.index() * shift, (n.index() + 2) * shift);
  };
  auto [alo, ahi] = scaled(a);
  auto [blo, bhi] = scaled(b);
  Int lo = alo > blo ? alo : blo;
  Int hi = ahi < bhi ? ahi : bhi;
  if (hi <= lo) return std::nullopt;  // empty or a single point
  Int width = hi - lo;
  if (mpz_popcount(width.get_mpz_t()) != 1) return std::nullopt;  // not a power of two
  auto s = static_cast<Level>(mpz_sizeinbase(width.get_mpz_t(), 2)) - 1;  // width = 2^s
  if (s > 0 && !mpz_divisible_2exp_p(lo.get_mpz_t(), static_cast<mp_bitcnt_t>(s - 1)))
    return std::nullopt;  // left endpoint not aligned to the node grid
  Level level = m - s + 1;
  Int k;
  if (s > 0)
    mpz_fdiv_q_2exp(k.get_mpz_t(), lo.get_mpz_t(), static_cast<mp_bitcnt_t>(s - 1));
  else
    k = lo << 1;
  return Node(k, level);
}

Node left_power(const Node& node, Level i) {
  Int shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(i));
  return Node(node.index() * shift, node.level() + i);
}

Node right_power(const Node& node, Level i) {
  Int shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(i));
  return Node((node.index() + 2) * shift - 2, node.level() + i);
}

std::vector<Node> extreme_descendants(const Node& node, Level depth) {
  if (depth < 1) throw std::invalid_argument("extreme_descendants: depth must be >= 1");
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(2 * depth));
  for (Level i = 1; i <= depth; ++i) {
    out.push_back(left_power(node, i));
    out.push_back(right_power(node, i));
  }
  return out;
}

std::string Node::str() const {
  return "(" + k_.get_str() + "," + std::to_string(n_) + ")";
}

std::optional<Node> Node::parse(std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  std::string_view ks = text.substr(0, comma);
  std::string_view ns = text.substr(comma + 1);
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!is_int(ks) || !is_int(ns)) return std::nullopt;
  Int k(std::string(ks), 10);
  try {
    return Node(k, static_cast<Level>(std::stoll(std::string(ns))));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace sbr
