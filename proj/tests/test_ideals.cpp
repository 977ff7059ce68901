#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sbr/error.hpp"
#include "sbr/ideals.hpp"
#include "support/corpus.hpp"

using sbr::CauchySubset;
using sbr::IdealKind;
using sbr::IdealTruncation;
using sbr::Index;
using sbr::Int;
using sbr::Level;
using sbr::Node;
using sbr::Rational;

namespace {

Rational rat(long num, long den) { return Rational(Int(num), Int(den)); }

IdealTruncation without(const IdealTruncation& t, const Node& node) {
  IdealTruncation out = t;
  out.nodes.erase(std::remove(out.nodes.begin(), out.nodes.end(), node), out.nodes.end());
  return out;
}

}  // namespace

TEST_CASE("o_slice") {
  for (Level l = 1; l <= 6; ++l) {
    auto s = sbr::o_slice(Rational(0), l);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Node(Int(-1), l));
    CHECK(s[0].midpoint() == Rational(0));
  }
  auto third = sbr::o_slice(rat(1, 3), 2);
  REQUIRE(third.size() == 2);
  CHECK(third[0] == Node(Int(0), 2));
  CHECK(third[1] == Node(Int(1), 2));

  auto half = sbr::o_slice(rat(1, 2), 3);
  REQUIRE(half.size() == 1);
  CHECK(half[0] == Node(Int(3), 3));
}

TEST_CASE("c_slice") {
  auto zero = sbr::c_slice(Rational(0), 4);
  REQUIRE(zero.size() == 3);
  CHECK(zero[0] == Node(Int(-2), 4));
  CHECK(zero[2] == Node(Int(0), 4));

  auto third = sbr::c_slice(rat(1, 3), 2);
  REQUIRE(third.size() == 2);
  CHECK(third[0] == Node(Int(0), 2));
  CHECK(third[1] == Node(Int(1), 2));

  auto half = sbr::c_slice(rat(1, 2), 3);
  REQUIRE(half.size() == 3);
  CHECK(half[0] == Node(Int(2), 3));
  CHECK(half[2] == Node(Int(4), 3));
}

TEST_CASE("slice cardinalities, adjacency, and containment over a random corpus") {
  testing_support::Rng rng(41);
  for (int iter = 0; iter < 150; ++iter) {
    Rational r = iter % 3 == 0 ? testing_support::random_dyadic(rng, 10, 8)
                               : testing_support::random_rational(rng, 100000, 100000, 8);
    for (Level l = 1; l <= 12; ++l) {
      auto o = sbr::o_slice(r, l);
      auto c = sbr::c_slice(r, l);
      CHECK(o.size() >= 1);
      CHECK(o.size() <= 2);
      CHECK(c.size() >= 2);
      CHECK(c.size() <= 3);
      for (std::size_t i = 1; i < c.size(); ++i)
        CHECK(c[i].index() == c[i - 1].index() + 1);
      for (const Node& n : o) {
        CHECK(n.lower() < r);
        CHECK(r < n.upper());
        CHECK(std::find(c.begin(), c.end(), n) != c.end());  // o_slice inside c_slice
      }
      for (const Node& n : c) {
        CHECK(n.lower() <= r);
        CHECK(r <= n.upper());
      }
    }
  }
}

TEST_CASE("truncate_ideal node counts") {
  CHECK(sbr::truncate_ideal(IdealKind::open, Rational(0), 1, 5).nodes.size() == 5);
  CHECK(sbr::truncate_ideal(IdealKind::closed, Rational(0), 1, 5).nodes.size() == 15);
  CHECK(sbr::truncate_ideal(IdealKind::open, rat(1, 3), 1, 10).nodes.size() == 20);
  CHECK_THROWS_AS(sbr::truncate_ideal(IdealKind::open, Rational(0), 5, 1), std::invalid_argument);
}

TEST_CASE("closed-ideal properties pass for endpoint and non-endpoint witnesses") {
  auto zero = sbr::truncate_ideal(IdealKind::closed, Rational(0), 1, 12);
  auto report = sbr::check_c_properties(zero, 6);
  for (const auto& p : report.properties) CHECK(p.passed);

  auto third = sbr::truncate_ideal(IdealKind::closed, rat(1, 3), 1, 12);
  auto report3 = sbr::check_c_properties(third, 6);
  for (const auto& p : report3.properties) CHECK(p.passed);

  CHECK_THROWS_AS(sbr::check_c_properties(zero, 20), sbr::ContractViolation);
  CHECK_THROWS_AS(
      sbr::check_c_properties(sbr::truncate_ideal(IdealKind::open, Rational(0), 1, 12), 6),
      sbr::ContractViolation);
}

TEST_CASE("single deletions are detected") {
  auto third = sbr::truncate_ideal(IdealKind::closed, rat(1, 3), 1, 12);

  // shared (even-k) node: the child condition breaks
  auto m1 = without(third, Node(Int(4), 4));
  REQUIRE(m1.nodes.size() == third.nodes.size() - 1);
  CHECK(!sbr::check_c_properties(m1, 6).all_passed());

  // single-parent (odd-k) node: the per-level cardinality floor breaks
  auto m2 = without(third, Node(Int(5), 4));
  REQUIRE(m2.nodes.size() == third.nodes.size() - 1);
  CHECK(!sbr::check_c_properties(m2, 6).all_passed());

  // endpoint witness: deleting the middle of three breaks adjacency
  auto zero = sbr::truncate_ideal(IdealKind::closed, Rational(0), 1, 12);
  auto m3 = without(zero, Node(Int(-1), 5));
  CHECK(!sbr::check_c_properties(m3, 6).all_passed());

  // and deleting an extreme-chain node breaks the endpoint condition
  auto m4 = without(zero, Node(Int(-2), 7));
  CHECK(!sbr::check_c_properties(m4, 6).all_passed());
}

TEST_CASE("open-ideal checks") {
  CHECK(sbr::check_o_ideal(sbr::truncate_ideal(IdealKind::open, rat(1, 3), 1, 12)));
  CHECK(sbr::check_o_ideal(sbr::truncate_ideal(IdealKind::open, Rational(0), 1, 12)));
  CHECK(sbr::check_o_ideal(sbr::truncate_ideal(IdealKind::open, rat(-7, 5), 1, 12)));
  CHECK_THROWS_AS(sbr::check_o_ideal(sbr::truncate_ideal(IdealKind::closed, Rational(0), 1, 4)),
                  sbr::ContractViolation);
}

TEST_CASE("a missing join is rejected") {
  // hand-built window around 1/3 lacking the join (2,3) of (-1,1) and (1,2)
  IdealTruncation t;
  t.kind = IdealKind::open;
  t.witness = rat(1, 3);
  t.level_lo = 1;
  t.level_hi = 3;
  t.nodes = {Node(Int(-1), 1), Node(Int(0), 1), Node(Int(0), 2), Node(Int(1), 2), Node(Int(1), 3)};
  std::sort(t.nodes.begin(), t.nodes.end());
  CHECK(!sbr::check_o_ideal(t));

  // restoring the join makes the same window acceptable
  t.nodes.push_back(Node(Int(2), 3));
  std::sort(t.nodes.begin(), t.nodes.end());
  CHECK(sbr::check_o_ideal(t));
}

TEST_CASE("deleting a deep node breaks downward closure of the window") {
  auto t = sbr::truncate_ideal(IdealKind::open, rat(1, 3), 1, 12);
  auto mutated = without(t, t.at_level(6).front());
  CHECK(!sbr::check_o_ideal(mutated));
}

TEST_CASE("separation: distinct witnesses give distinct truncations") {
  testing_support::Rng rng(53);
  for (int iter = 0; iter < 50; ++iter) {
    Rational a = testing_support::random_rational(rng, 100, 100, 8);
    Rational b = testing_support::random_rational(rng, 100, 100, 8);
    if (a == b) continue;
    auto ta = sbr::truncate_ideal(IdealKind::closed, a, 1, 16);
    auto tb = sbr::truncate_ideal(IdealKind::closed, b, 1, 16);
    CHECK(ta.nodes != tb.nodes);
  }
}

TEST_CASE("an open-ideal window reinterpreted as a Cauchy subset") {
  auto t = sbr::truncate_ideal(IdealKind::open, rat(1, 3), 1, 12);
  CauchySubset s;
  s.nodes = t.nodes;
  s.max_level = 12;
  for (Index p = 0; p <= 9; ++p) s.modulus[p] = p + 2;
  CHECK(sbr::cauchy_check(s));
  CHECK(sbr::is_unblocked(s));

  auto bounds = sbr::limit_bounds(s, 3);
  CHECK(bounds.contains(rat(1, 3)));
  CHECK(bounds.width() == Rational(2) * (Rational::pow2(-3) + Rational::pow2(-5)));
}

TEST_CASE("a single-chain downset passes the downset checks") {
  // ancestors of one node at level 10
  auto one = sbr::cauchy_from_sequence([](Index) { return rat(1, 3); }, 10);
  CHECK(sbr::cauchy_check(one));
  CHECK(sbr::is_unblocked(one));
}

TEST_CASE("far-apart nodes at a high level violate the convergence clause") {
  CauchySubset s = sbr::cauchy_from_sequence([](Index) { return Rational(0); }, 8);
  // adjoin the downset of a node near 200/256, then declare a tight modulus
  CauchySubset far = sbr::cauchy_from_sequence([](Index) { return rat(200, 256); }, 8);
  std::set<Node> merged(s.nodes.begin(), s.nodes.end());
  merged.insert(far.nodes.begin(), far.nodes.end());
  s.nodes.assign(merged.begin(), merged.end());
  s.modulus[1] = 2;
  CHECK(!sbr::cauchy_check(s));
}

TEST_CASE("limit_bounds failure modes") {
  auto s = sbr::cauchy_from_sequence([](Index) { return rat(1, 3); }, 6);
  s.modulus[2] = 4;
  CHECK(sbr::limit_bounds(s, 2).contains(rat(1, 3)));
  CHECK_THROWS_AS(sbr::limit_bounds(s, 5), sbr::ContractViolation);  // undeclared p
  s.modulus[9] = 6;
  CHECK_THROWS_AS(sbr::limit_bounds(s, 9), sbr::ContractViolation);  // nothing beyond level 6
}

TEST_CASE("cauchy_from_sequence examples") {
  auto constant = sbr::cauchy_from_sequence([](Index) { return rat(1, 3); }, 8,
                                            [](Index) { return Index(1); });
  CHECK(sbr::cauchy_check(constant));
  for (Level n = 1; n <= 8; ++n) {
    Node expected(rat(1, 3).mul_pow2(n).floor(), n);
    CHECK(constant.has(expected));
  }

  auto zero = sbr::cauchy_from_sequence([](Index) { return Rational(0); }, 8,
                                        [](Index) { return Index(1); });
  for (Level n = 1; n <= 8; ++n) CHECK(zero.has(Node(Int(0), n)));
  CHECK(sbr::limit_bounds(zero, 0).contains(Rational(0)));

  auto harmonic = sbr::cauchy_from_sequence([](Index n) { return Rational(Int(1), Int(n)); }, 20,
                                            [](Index i) { return i; });
  CHECK(sbr::cauchy_check(harmonic));
  CHECK(sbr::limit_bounds(harmonic, 2).contains(Rational(0)));
}

TEST_CASE("generated downsets contain the open truncation of the limit at settled levels") {
  testing_support::Rng rng(61);
  const Level depth = 16;
  for (int iter = 0; iter < 20; ++iter) {
    Rational r = testing_support::random_rational(rng, 50, 8, 4);
    auto c = [r](Index n) { return r; };
    auto s = sbr::cauchy_from_sequence(c, depth);
    Level settle = sbr::ceil_log2_abs(Rational(r.denominator())) + 2;
    auto o = sbr::truncate_ideal(IdealKind::open, r, 1, depth - settle);
    for (const Node& node : o.nodes) CHECK(s.has(node));
  }
}

TEST_CASE("o_enumerate stays inside the open ideal and covers the window") {
  const Rational third = rat(1, 3);
  const Node J(Int(0), 1);
  auto defined = sbr::o_enumerate(third, J, 100000);
  CHECK(!defined.empty());
  for (const auto& [step, node] : defined) {
    (void)step;
    CHECK(node.lower() < third);
    CHECK(third < node.upper());
  }
  // every open-ideal node on levels 1..6 appears among the defined values
  auto o = sbr::truncate_ideal(IdealKind::open, third, 1, 6);
  for (const Node& node : o.nodes) {
    bool seen = false;
    for (const auto& [step, got] : defined) {
      (void)step;
      if (got == node) {
        seen = true;
        break;
      }
    }
    CHECK(seen);
  }
}

TEST_CASE("o_enumerate finds the middle chain under zero") {
  auto defined = sbr::o_enumerate(Rational(0), Node(Int(-1), 1), 30000);
  for (Level l = 1; l <= 4; ++l) {
    bool seen = false;
    for (const auto& [step, got] : defined) {
      (void)step;
      if (got == Node(Int(-1), l)) seen = true;
    }
    CHECK(seen);
  }
  CHECK_THROWS_AS(sbr::o_enumerate(Rational(2), Node(Int(-1), 1), 10), sbr::ContractViolation);
}

TEST_CASE("truncation serialization") {
  auto t = sbr::truncate_ideal(IdealKind::open, rat(1, 3), 1, 3);
  CHECK(sbr::serialize(t) ==
        "kind=O r=1/3 levels=1..3\n(-1,1)\n(0,1)\n(0,2)\n(1,2)\n(1,3)\n(2,3)\n");
}
