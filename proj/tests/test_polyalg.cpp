#include <random>

#include "doctest.h"
#include "qst/error.hpp"
#include "qst/polyalg.hpp"
#include "support.hpp"

using namespace qst;
using testing::P;
using testing::Q;

TEST_CASE("parsing") {
  const MultiPoly f = P("2*x0^2 + 3*x1^2", 2);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Monomial({2, 0})) == 2);
  CHECK(f.coefficient(Monomial({0, 2})) == 3);
  CHECK_THROWS_WITH_AS(P("x0 - x0", 1), doctest::Contains("zero polynomial"), DomainError);
  const MultiPoly g = P("1/2*x0*x1", 2);
  CHECK(g.size() == 1);
  CHECK(g.coefficient(Monomial({1, 1})) == Q(1, 2));
  CHECK_THROWS_AS(P("x0 +* x1", 2), ParseError);
  CHECK_THROWS_AS(P("x2", 2), ParseError);
  CHECK(P("(x0 + x1)^2", 2) == P("x0^2 + 2*x0*x1 + x1^2", 2));
}

TEST_CASE("evaluation") {
  const Rational a[] = {3, 4};
  CHECK(P("x0^2 + x1^2", 2).evaluate(a) == 25);
  const Rational b[] = {1, 2, 4};
  CHECK(P("x0*x2 - x1^2", 3).evaluate(b) == 0);
  const Rational c[] = {Q(1, 2), Q(1, 3)};
  CHECK(P("2*x0^2 + 3*x1^2", 2).evaluate(c) == Q(5, 6));
}

TEST_CASE("homogeneous degree") {
  CHECK(P("x0*x2 - x1^2", 3).homogeneous_degree() == 2);
  CHECK_FALSE(P("x0 + x1^2", 2).homogeneous_degree().has_value());
  CHECK(P("x0^3", 1).homogeneous_degree() == 3);
}

TEST_CASE("norms of the worked examples") {
  const auto f = testing::Ps({"2*x0^2 + 3*x1^2"}, 2);
  CHECK(system_norm(f, Place::prime(2), NormVariant::Max) == 1);
  const auto g = testing::Ps({"1", "2*x0^2 + 3*x1^2"}, 2);
  CHECK(system_norm(g, Place::infinity(), NormVariant::Sum) == 6);
  const auto h = testing::Ps({"x0 - x1"}, 2);
  CHECK(system_norm(h, Place::infinity(), NormVariant::Max) == 1);
}

TEST_CASE("heights of the worked examples") {
  CHECK(system_height(testing::Ps({"2*x0^2 + 3*x1^2"}, 2), HeightVariant::H).mult() == 3);
  CHECK(system_height(testing::Ps({"x0 + x1"}, 2), HeightVariant::H).mult() == 1);
  CHECK(system_height(testing::Ps({"1", "2*x0^2 + 3*x1^2"}, 2), HeightVariant::H1).mult() == 6);
}

TEST_CASE("property: scaling, h1 versus h, round trip and homogeneity") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 150; ++k) {
    const std::size_t vars = 2 + k % 3;
    const int deg = 1 + k % 3;
    std::vector<MultiPoly> sys;
    for (int j = 0; j < 1 + k % 3; ++j) {
      MultiPoly f = testing::random_homogeneous(rng, vars, deg, 20, 4);
      f = f * testing::random_rational(rng, 50);
      sys.push_back(f);
    }
    const Rational lambda = testing::random_rational(rng, 1000);
    std::vector<MultiPoly> scaled;
    for (const MultiPoly& f : sys) scaled.push_back(f * lambda);
    CHECK(system_height(scaled, HeightVariant::H) == system_height(sys, HeightVariant::H));
    CHECK(system_height(sys, HeightVariant::H1) >= system_height(sys, HeightVariant::H));

    for (const MultiPoly& f : sys) {
      CHECK(parse_poly(to_string(f), vars) == f);
      std::vector<Rational> pt, lpt;
      for (std::size_t i = 0; i < vars; ++i) {
        pt.push_back(testing::random_rational(rng, 30));
        lpt.push_back(pt.back() * lambda);
      }
      CHECK(f.evaluate(lpt) == pow(lambda, deg) * f.evaluate(pt));
    }
  }
}

TEST_CASE("arithmetic identities") {
  const MultiPoly a = P("x0 + 2*x1", 2), b = P("x0 - x1", 2);
  CHECK((a * b) == P("x0^2 + x0*x1 - 2*x1^2", 2));
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.substitute(testing::Ps({"x1", "x0"}, 2)) == P("x1 + 2*x0", 2));
  CHECK(PolySystem(testing::Ps({"x0", "x1^2", "x0^3"}, 2)).degree_lcm() == 6);
  CHECK_THROWS_AS(PolySystem(testing::Ps({"x0", "x0 + x1^2"}, 2)), Error);
}
