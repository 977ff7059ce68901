#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>
#include <vector>

#include "sbr/stream.hpp"
#include "support/corpus.hpp"

using sbr::Digit;
using sbr::Int;
using sbr::Level;
using sbr::Node;
using sbr::Rational;

namespace {

Rational rat(long num, long den) { return Rational(Int(num), Int(den)); }

}  // namespace

TEST_CASE("zero is the all-zero stream") {
  auto z = sbr::from_rational(Rational(0));
  CHECK(z.start() == 0);
  for (Level l = 0; l <= 20; ++l) {
    CHECK(z.digit(l) == Digit::zero);
    CHECK(z.approx(l) == Rational(0));
    CHECK(z.path_node(l) == Node(Int(-1), l));
  }
}

TEST_CASE("start index is the largest n with |r| <= 2^-n") {
  CHECK(sbr::from_rational(rat(1, 2)).start() == 1);
  CHECK(sbr::from_rational(rat(1, 3)).start() == 1);
  CHECK(sbr::from_rational(rat(1, 5)).start() == 2);
  CHECK(sbr::from_rational(Rational(1)).start() == 0);
  CHECK(sbr::from_rational(Rational(7)).start() == -3);
  CHECK(sbr::from_rational(rat(-1, 2)).start() == 1);
}

TEST_CASE("dyadics are hit exactly") {
  auto h = sbr::from_rational(rat(1, 2));
  CHECK(h.digit(1) == Digit::plus);
  for (Level i = 2; i <= 20; ++i) CHECK(h.digit(i) == Digit::zero);
  for (Level l = 1; l <= 20; ++l) CHECK(h.approx(l) == rat(1, 2));
  CHECK(h.path_node(2).midpoint() == rat(1, 2));
}

TEST_CASE("greedy digits of 1/3 alternate, and the partial sums obey the path bound") {
  auto t = sbr::from_rational(rat(1, 3));
  REQUIRE(t.start() == 1);
  for (Level i = 1; i <= 16; ++i)
    CHECK(t.digit(i) == (i % 2 == 1 ? Digit::plus : Digit::minus));
  for (Level l = 1; l <= 40; ++l)
    CHECK((t.approx(l) - rat(1, 3)).abs() <= Rational::pow2(-l));
}

TEST_CASE("path nodes step through the child relation, role matching the digit") {
  testing_support::Rng rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    Rational r = testing_support::random_rational(rng, 1000, 1000, 8);
    auto x = sbr::from_rational(r);
    for (Level l = x.start(); l < x.start() + 20; ++l) {
      Node here = x.path_node(l);
      Node next = x.path_node(l + 1);
      CHECK(contains(here, next));
      CHECK(child(here, role_from_digit(x.digit(l + 1))) == next);
    }
  }
}

TEST_CASE("round trip: evaluation stays within 2^-l of the rational") {
  testing_support::Rng rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    Rational r = testing_support::random_rational(rng, 100000, 100000, 8);
    auto x = sbr::from_rational(r);
    for (Level l = x.start(); l <= 30; ++l)
      CHECK((x.approx(l) - r).abs() <= Rational::pow2(-l));
    // indices below the start carry digit zero and the bound still holds
    CHECK(x.digit(x.start() - 3) == Digit::zero);
    CHECK(r.abs() <= Rational::pow2(-x.start()));
  }
}

TEST_CASE("from_oracle of the zero oracle is the zero stream") {
  auto z = sbr::from_oracle([](Level) { return Rational(0); });
  CHECK(z.start() == 0);
  for (Level i = 0; i <= 20; ++i) CHECK(z.digit(i) == Digit::zero);
}

TEST_CASE("from_oracle tracks a directly truncated 1/3") {
  // A(k) = floor(2^k / 3 + 1/2) / 2^k is within 2^-(k+1) of 1/3
  auto a = [](Level k) {
    Rational t = rat(1, 3).mul_pow2(k) + rat(1, 2);
    return Rational(t.floor()).mul_pow2(-k);
  };
  auto x = sbr::from_oracle(a);
  for (Level l = x.start(); l <= 30; ++l)
    CHECK((x.approx(l) - rat(1, 3)).abs() <= Rational::pow2(-l));
}

TEST_CASE("from_oracle round trip over random rationals, closure under the representation") {
  testing_support::Rng rng(47);
  for (int iter = 0; iter < 100; ++iter) {
    Rational r = testing_support::random_rational(rng, 10000, 10000, 8);
    auto direct = sbr::from_rational(r);
    auto once = sbr::from_oracle(direct.oracle());
    for (Level l = once.start(); l <= 25; ++l)
      CHECK((once.approx(l) - r).abs() <= Rational::pow2(-l));
    auto twice = sbr::from_oracle(once.oracle());
    for (Level l = twice.start(); l <= 20; ++l)
      CHECK((twice.approx(l) - r).abs() <= Rational::pow2(-l));
  }
}

TEST_CASE("digits are deterministic and safe to read concurrently") {
  auto x = sbr::from_rational(rat(355, 113));
  std::vector<Digit> first, second;
  std::thread t1([&] {
    for (Level i = x.start(); i <= 60; ++i) first.push_back(x.digit(i));
  });
  std::thread t2([&] {
    for (Level i = x.start(); i <= 60; ++i) second.push_back(x.digit(i));
  });
  t1.join();
  t2.join();
  CHECK(first == second);
  for (Level i = x.start(); i <= 60; ++i)
    CHECK(x.digit(i) == first[static_cast<std::size_t>(i - x.start())]);
}

TEST_CASE("serialization format") {
  CHECK(sbr::serialize(sbr::from_rational(rat(1, 2)), 5) == "start=1\n+0000\ndepth=5\n");
  CHECK(sbr::serialize(sbr::from_rational(Rational(0)), 3) == "start=0\n0000\ndepth=3\n");
  CHECK(sbr::serialize(sbr::from_rational(rat(1, 3)), 4) == "start=1\n+-+-\ndepth=4\n");
}
