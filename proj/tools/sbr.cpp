#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "sbr/arithmetic.hpp"
#include "sbr/error.hpp"
#include "sbr/expr.hpp"
#include "sbr/ideals.hpp"
#include "sbr/riesz.hpp"
#include "sbr/sequences.hpp"
#include "sbr/stream.hpp"

namespace {

using sbr::Index;
using sbr::Level;
using sbr::Rational;

// exits with code 1 via the generic handler in main
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto r = Rational::parse(text);
  if (!r) throw UsageError("malformed rational for " + what + ": '" + text + "'");
  return *r;
}

std::vector<Rational> load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open sequence file: " + path);
  std::vector<Rational> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto r = Rational::parse(line);
    if (!r) throw UsageError(path + ": line " + std::to_string(lineno) + ": malformed rational '" + line + "'");
    out.push_back(*r);
  }
  if (out.empty()) throw UsageError(path + ": no entries");
  return out;
}

sbr::RationalSequence sequence_from(const std::vector<Rational>& values, const std::string& path) {
  return [values, path](Index n) {
    if (n < 1 || static_cast<std::size_t>(n) > values.size())
      throw UsageError(path + ": index " + std::to_string(n) + " beyond the " +
                       std::to_string(values.size()) + " entries in the file");
    return values[static_cast<std::size_t>(n - 1)];
  };
}

// xorshift64*: deterministic across platforms, used for the demo data
struct DemoRng {
  std::uint64_t s;
  explicit DemoRng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1Dull;
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

int run_eval(const std::string& expr_text, Level bits, bool as_json) {
  sbr::Expression e = sbr::parse_expression(expr_text);
  sbr::SignedBitNumber x = sbr::eval_signed_bit(e);
  Rational mid = x.approx(bits);
  if (as_json) {
    std::string digits;
    for (Level i = x.start(); i <= bits; ++i) digits += sbr::digit_char(x.digit(i));
    nlohmann::json j{{"start", x.start()}, {"digits", digits}, {"depth", bits}, {"midpoint", mid.str()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << sbr::serialize(x, bits);
    std::cout << "midpoint=" << mid.str() << "\n";
  }
  return 0;
}

int run_ideal(sbr::IdealKind kind, const std::string& r_text, Level depth, bool check, bool as_json) {
  Rational r = parse_rational_arg(r_text, "the witness");
  sbr::IdealTruncation t = sbr::truncate_ideal(kind, r, 1, depth);
  if (as_json) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : t.nodes) nodes.push_back(n.str());
    nlohmann::json j{{"kind", kind == sbr::IdealKind::open ? "O" : "C"},
                     {"r", r.str()},
                     {"levels", {{"lo", t.level_lo}, {"hi", t.level_hi}}},
                     {"nodes", nodes}};
    if (check) {
      auto report = sbr::check_c_properties(t, std::min<Level>(6, depth - 1));
      nlohmann::json props = nlohmann::json::array();
      for (std::size_t i = 0; i < report.properties.size(); ++i)
        props.push_back({{"property", i + 1},
                         {"passed", report.properties[i].passed},
                         {"note", report.properties[i].note}});
      j["check"] = props;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << sbr::serialize(t);
  if (check) {
    auto report = sbr::check_c_properties(t, std::min<Level>(6, depth - 1));
    for (std::size_t i = 0; i < report.properties.size(); ++i) {
      const auto& p = report.properties[i];
      std::cout << "property " << (i + 1) << ": " << (p.passed ? "PASS" : "FAIL") << " (" << p.note
                << ")\n";
    }
    if (!report.all_passed()) return 2;
  }
  return 0;
}

int run_cauchy(const std::string& path, Level depth) {
  auto values = load_sequence_file(path);
  auto c = sequence_from(values, path);
  sbr::CauchySubset s = sbr::cauchy_from_sequence(c, depth);
  std::cout << "levels=" << s.min_level() << ".." << s.max_level << "\n";
  for (const auto& n : s.nodes) std::cout << n.str() << "\n";
  std::cout << "cauchy_check=" << (sbr::cauchy_check(s) ? "PASS" : "FAIL") << "\n";
  std::cout << "unblocked=" << (sbr::is_unblocked(s) ? "YES" : "NO") << "\n";
  return 0;
}

int run_modulus(const std::string& p_path, const std::string& q_path, Index m, Index witness) {
  auto pv = load_sequence_file(p_path);
  auto qv = load_sequence_file(q_path);
  auto p = sequence_from(pv, p_path);
  auto q = sequence_from(qv, q_path);
  sbr::ConvergenceWitness K = [witness](const Rational&) { return witness; };
  Index k = std::max<Index>(witness, 1);
  Index mu = sbr::compute_modulus(p, q, K, m);
  std::cout << "mu=" << mu << "\n";
  std::cout << "verified: |p(n) - q(" << 3 * m << ")| <= 1/" << 2 * m << " for n in " << mu << ".."
            << k << "\n";
  return 0;
}

int run_riesz_demo(std::size_t dim, std::size_t coord, Level depth, std::uint64_t seed) {
  if (coord < 1 || coord > dim) throw UsageError("--coord must lie in 1..dim");
  DemoRng rng(seed);
  auto random_element = [&] {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim; ++i)
      c.emplace_back(sbr::Int(rng.range(-9, 9)), sbr::Int(rng.range(1, 9)));
    return sbr::RieszElement(std::move(c));
  };

  std::vector<sbr::RieszElement> base;
  for (int i = 0; i < 5; ++i) base.push_back(random_element());
  base.push_back(sbr::RieszElement::unit(dim));

  std::vector<std::pair<sbr::RieszElement, sbr::RieszElement>> probes;
  std::vector<sbr::RieszElement> domain = base;
  auto ensure = [&](const sbr::RieszElement& x) {
    for (const auto& e : domain)
      if (e == x) return;
    domain.push_back(x);
  };
  for (int i = 0; i < 5; ++i) {
    const auto& x = base[static_cast<std::size_t>(rng.range(0, 4))];
    const auto& y = base[static_cast<std::size_t>(rng.range(0, 4))];
    probes.emplace_back(x, y);
    ensure(sbr::plus(x, y));
    ensure(sbr::wedge(x, y));
  }
  std::vector<std::pair<Rational, sbr::RieszElement>> scale_probes;
  for (int i = 0; i < 2; ++i) {
    Rational q(sbr::Int(rng.range(-4, 4)), sbr::Int(rng.range(1, 4)));
    const auto& x = base[static_cast<std::size_t>(rng.range(0, 4))];
    scale_probes.emplace_back(q, x);
    ensure(sbr::scale(q, x));
  }

  sbr::InducedFamily family = sbr::induced_family(coord, domain, depth);

  std::cout << "elements:\n";
  for (const auto& x : domain) std::cout << "  " << x.str() << "\n";
  std::cout << "family (coordinate " << coord << "):\n";
  for (const auto& [x, t] : family) {
    std::cout << "element=" << x.str() << "\n";
    std::cout << sbr::serialize(t);
  }

  sbr::ChiAssignment sample;
  for (const auto& [x, t] : family) {
    const auto& node = t.nodes[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(t.nodes.size()) - 1))];
    sample.assign(x, node);
  }
  std::cout << "sample selection:\n";
  for (const auto& [x, node] : sample.entries())
    std::cout << "  " << x.str() << " -> " << node.str() << "\n";
  std::cout << "chi_member=" << (sbr::chi_member(sample) ? "TRUE" : "FALSE") << "\n";

  auto report = sbr::reconstruct_hom(family, probes, scale_probes, Rational::pow2(-10));
  if (!report.precondition_ok) {
    std::cout << "precondition: FAIL (" << report.precondition_note << ")\n";
    return 2;
  }
  for (const auto& c : report.checks)
    std::cout << (c.passed ? "PASS" : "FAIL") << " " << c.description << "\n";
  return report.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "signed-bit real arithmetic on the ternary pseudotree of dyadic intervals\n"
      "All numbers are exact rationals printed as <num>/<den>; nodes print as (k,n)\n"
      "for the interval (k/2^n, (k+2)/2^n)."};
  app.require_subcommand(1);

  std::string expr_text, r_text, seq_path, p_path, q_path;
  Level bits = 8, depth = 6, demo_depth = 20;
  bool as_json = false, do_check = false;
  Index m = 1, witness = 1;
  std::size_t dim = 3, coord = 1;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand(
      "eval",
      "evaluate an expression to a signed-bit stream\n"
      "Grammar: rationals like 2/3, unary -, binary + - *, min(,), max(,), avg(,).\n"
      "Accuracy budget: every operator renormalizes, so the depth-N midpoint is\n"
      "within 2^-N of the exact value (budget 0 per operator).");
  eval->add_option("expr", expr_text, "expression text")->required();
  eval->add_option("--bits", bits, "serialization depth N >= 1")->required()->check(CLI::PositiveNumber);
  eval->add_flag("--json", as_json, "emit JSON instead of lines");

  auto* oideal = app.add_subcommand("oideal", "nodes of the open ideal of a rational, levels 1..D");
  oideal->add_option("r", r_text, "rational witness")->required();
  oideal->add_option("--depth", depth, "deepest level D >= 1")->required()->check(CLI::PositiveNumber);
  oideal->add_flag("--json", as_json);

  auto* cideal = app.add_subcommand("cideal", "nodes of the closed ideal of a rational, levels 1..D");
  cideal->add_option("r", r_text, "rational witness")->required();
  cideal->add_option("--depth", depth, "deepest level D >= 2 with --check")->required()->check(CLI::PositiveNumber);
  cideal->add_flag("--check", do_check, "run the six closure-property checks");
  cideal->add_flag("--json", as_json);

  auto* cauchy = app.add_subcommand("cauchy-from-seq",
                                    "downset generated by the nodes of a rational sequence");
  cauchy->add_option("file", seq_path, "one rational per line, line number = index")->required();
  cauchy->add_option("--depth", depth, "number of sequence terms used")->required()->check(CLI::PositiveNumber);

  auto* modulus = app.add_subcommand("modulus", "modulus-of-convergence extraction");
  modulus->add_option("--p", p_path, "sequence converging to the limit")->required();
  modulus->add_option("--q", q_path, "regular sequence with the same limit")->required();
  modulus->add_option("--m", m, "precision index m >= 1")->required()->check(CLI::PositiveNumber);
  modulus->add_option("--witness", witness,
                      "index K with |p(n) - limit| <= 1/(6m) for all n >= K")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("riesz-demo",
                                  "induced ideal family of a coordinate projection on Q^d,\n"
                                  "a sampled membership test, and the homomorphism report");
  demo->add_option("--dim", dim, "dimension d")->check(CLI::PositiveNumber);
  demo->add_option("--coord", coord, "projection coordinate, 1-based")->check(CLI::PositiveNumber);
  demo->add_option("--depth", demo_depth, "truncation depth (>= 13 for eps = 2^-10)")->check(CLI::PositiveNumber);
  demo->add_option("--seed", seed, "seed for the deterministic demo data");

  int rc = 0;
  eval->callback([&] { rc = run_eval(expr_text, bits, as_json); });
  oideal->callback([&] { rc = run_ideal(sbr::IdealKind::open, r_text, depth, false, as_json); });
  cideal->callback([&] { rc = run_ideal(sbr::IdealKind::closed, r_text, depth, do_check, as_json); });
  cauchy->callback([&] { rc = run_cauchy(seq_path, depth); });
  modulus->callback([&] { rc = run_modulus(p_path, q_path, m, witness); });
  demo->callback([&] { rc = run_riesz_demo(dim, coord, demo_depth, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const sbr::ExprError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const sbr::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
