#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "walgebra/errors.hpp"
#include "walgebra/idealkit.hpp"

using namespace walgebra;
using namespace walgebra::idealkit;

namespace {

Ring ring(std::vector<std::string> names) { return Ring{std::move(names), {}}; }

std::vector<Polynomial> parse_all(const Ring& R, std::vector<std::string> ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_polynomial(R, s));
  return out;
}

std::vector<std::string> formatted(const Ring& R, const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format(R, p));
  return out;
}

oracle::Poly to_oracle(const Polynomial& p) {
  oracle::Poly q;
  for (const auto& t : p.terms()) q[t.exps] = t.coef;
  return q;
}

Claim lines_claim(const Ring& R, std::vector<std::vector<std::string>> comps) {
  Claim c;
  c.variables = R.names;
  for (std::size_t k = 0; k < comps.size(); ++k)
    c.components.push_back(parse_component(R, "L" + std::to_string(k + 1), {"s"}, comps[k]));
  return c;
}

}  // namespace

TEST_CASE("parser and formatting") {
  auto R = ring({"x", "y"});
  CHECK(format(R, parse_polynomial(R, "(x+y)^2 - 2*x*y")) == "x^2 + y^2");
  CHECK(format(R, parse_polynomial(R, "x/2 - 3/4")) == "1/2*x - 3/4");
  CHECK(format(R, parse_polynomial(R, "-x*(y-1)")) == "-x*y + x");
  CHECK_THROWS_AS(parse_polynomial(R, "x/y"), InputError);
  CHECK_THROWS_AS(parse_polynomial(R, "z"), InputError);
  CHECK_THROWS_AS(parse_polynomial(R, "x +"), InputError);
}

TEST_CASE("small Groebner bases") {
  auto R = ring({"x", "y"});
  CHECK(formatted(R, groebner(R, parse_all(R, {"x^2 - y", "y"}))) == std::vector<std::string>{"y", "x^2"});
  CHECK(groebner(R, {}).empty());
  auto gb = groebner(R, parse_all(R, {"x*y - 1", "x^2 - y"}));
  CHECK(groebner(R, gb) == gb);
  for (const auto& p : parse_all(R, {"x*y - 1", "x^2 - y"})) CHECK(contains(R, gb, p));
  CHECK(formatted(R, groebner(R, parse_all(R, {"x - 1", "x - 2"}))) == std::vector<std::string>{"1"});
}

TEST_CASE("reduced bases match the naive Buchberger oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
  int compared = 0, nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k));
    auto R = ring(names);
    std::vector<Polynomial> gens;
    const int ngens = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < ngens; ++g) {
      std::vector<Term> ts;
      const int nterms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < nterms; ++t) {
        Exponents e(n, 0);
        int budget = deg(rng);
        for (int b = 0; b < budget; ++b) ++e[rng() % n];
        int c = 0;
        while (c == 0) c = coef(rng);
        ts.push_back(Term{e, Rational(c)});
      }
      gens.push_back(Polynomial::from_terms(R, ts));
    }
    std::vector<oracle::Poly> og;
    for (const auto& g : gens) og.push_back(to_oracle(g));
    auto want = oracle::naive_groebner(og);
    std::vector<oracle::Poly> got;
    for (const auto& p : groebner(R, gens)) got.push_back(to_oracle(p));
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    ++compared;
    if (!(got.size() == 1 && got[0].size() == 1 && got[0].begin()->first == std::vector<int>(n, 0))) ++nontrivial;
  }
  CHECK(compared == 100);
  MESSAGE("nontrivial ideals: " << nontrivial);
  CHECK(nontrivial >= 50);
}

TEST_CASE("dimension") {
  auto R = ring({"t1", "t2"});
  CHECK(dimension(R, groebner(R, parse_all(R, {"t1*t2"}))) == 1);
  CHECK(dimension(R, groebner(R, parse_all(R, {"1"}))) == -1);
  CHECK(dimension(R, groebner(R, {})) == 2);
  CHECK(dimension(R, groebner(R, parse_all(R, {"t1 - 1", "t2^2"}))) == 0);
}

TEST_CASE("intersection, elimination and radical membership") {
  auto R = ring({"x", "y"});
  auto I = groebner(R, intersect(R, parse_all(R, {"x"}), parse_all(R, {"y"})));
  CHECK(formatted(R, I) == std::vector<std::string>{"x*y"});
  auto sq = groebner(R, parse_all(R, {"x^2"}));
  CHECK(!contains(R, sq, parse_polynomial(R, "x")));
  CHECK(radical_contains(R, sq, parse_polynomial(R, "x")));
  CHECK(!radical_contains(R, sq, parse_polynomial(R, "y")));
  auto C = parse_component(R, "P", {"s"}, {"s", "s^2"});
  CHECK(formatted(R, component_ideal(R, C)) == std::vector<std::string>{"x^2 - y"});
  CHECK(is_affine_space_chart(C));
  CHECK(!is_affine_space_chart(parse_component(R, "Q", {"s"}, {"s^2", "s^3"})));
}

TEST_CASE("decomposition verification") {
  auto R = ring({"t1", "t2"});
  auto I = parse_all(R, {"t1*t2"});
  auto two = lines_claim(R, {{"s", "0"}, {"0", "s"}});
  two.intersections.push_back({0, 1, parse_component(R, "O", {}, {"0", "0"})});
  auto rep = verify_decomposition(R, I, two);
  CHECK(rep.pass);
  CHECK(rep.intersections.at(0).matches);
  CHECK(verify_decomposition(R, I, lines_claim(R, {{"s", "0"}})).pass == false);
  auto wrong_point = two;
  wrong_point.intersections[0].expected = parse_component(R, "P", {}, {"1", "0"});
  CHECK(!verify_decomposition(R, I, wrong_point).pass);
  auto redundant = lines_claim(R, {{"s", "0"}, {"0", "s"}, {"2*s", "0"}});
  CHECK(!verify_decomposition(R, I, redundant).irredundant);

  // Non-reduced: (t1^2 t2) defines the same variety only up to radical.
  auto J = parse_all(R, {"t1^2*t2"});
  auto claim = lines_claim(R, {{"s", "0"}, {"0", "s"}});
  auto strict = verify_decomposition(R, J, claim);
  CHECK(!strict.pass);
  CHECK(strict.components_in_radical);
  claim.accept_radical = true;
  CHECK(verify_decomposition(R, J, claim).pass);
  Claim bad = claim;
  bad.variables = {"a", "b"};
  CHECK_THROWS_AS(verify_decomposition(R, J, bad), InputError);
}

TEST_CASE("fixed ideals and component permutations") {
  auto R = ring({"t1", "t2"});
  auto I = parse_all(R, {"t1*t2"});
  LinearMap flip{{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}};
  auto fixed = gamma_fixed_ideal(R, I, {flip});
  REQUIRE(!fixed.witness);
  CHECK(formatted(R, fixed.basis) == std::vector<std::string>{"t1"});
  CHECK(dimension(R, fixed.basis) == 1);
  auto trivial = gamma_fixed_ideal(R, I, {});
  CHECK(trivial.basis == groebner(R, I));

  LinearMap swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  auto claim = lines_claim(R, {{"s", "0"}, {"0", "s"}});
  CHECK(component_permutation(R, claim, swap) == std::vector<int>{1, 0});
  CHECK(component_permutation(R, claim, flip) == std::vector<int>{0, 1});

  LinearMap shear{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  auto bad = gamma_fixed_ideal(R, I, {shear});
  REQUIRE(bad.witness);
  CHECK(bad.witness->first == 0);
}
