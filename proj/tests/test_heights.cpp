#include <cmath>
#include <random>

#include "doctest.h"
#include "qst/error.hpp"
#include "qst/heights.hpp"
#include "support.hpp"

using namespace qst;
using testing::P;
using testing::Q;

namespace {

ProjPoint pt(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.push_back(a);
  return ProjPoint(std::span<const Rational>(v));
}

ProjPoint random_point(std::mt19937_64& rng, std::size_t size, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    std::vector<Rational> v;
    bool nonzero = false;
    for (std::size_t i = 0; i < size; ++i) {
      v.push_back(Q(dist(rng), 1 + std::abs(dist(rng))));
      nonzero = nonzero || v.back() != 0;
    }
    if (nonzero) return ProjPoint(std::span<const Rational>(v));
  }
}

}  // namespace

TEST_CASE("projective heights") {
  CHECK(proj_height(pt({2, 4, 6})).mult() == 3);
  CHECK(pt({2, 4, 6}).to_string() == "(1:2:3)");
  CHECK(proj_height(pt({1, 0, 0})).mult() == 1);
  const Rational half_third[] = {Q(1, 2), Q(1, 3)};
  const ProjPoint p(half_third);
  CHECK(proj_height(p).mult() == 3);
  CHECK(p.to_string() == "(3:2)");
  CHECK(ProjPoint::parse("1/2,1/3") == p);
  CHECK_THROWS_AS(pt({0, 0}), DomainError);
}

TEST_CASE("Weil functions of divisors") {
  CHECK(weil_divisor(P("x1", 2), Place::infinity(), pt({2, 1})).mult() == 2);
  CHECK(weil_divisor(P("x0 - x1", 2), Place::infinity(), pt({3, 2})).mult() == 3);
  CHECK(weil_divisor(P("x0", 2), Place::prime(5), pt({1, 5})).mult() == 1);
  CHECK_THROWS_AS(weil_divisor(P("x0 - x1", 2), Place::infinity(), pt({1, 1})), PointOnDivisor);
}

TEST_CASE("Weil functions of subschemes") {
  const auto fs = testing::Ps({"x0", "x1"}, 3);
  CHECK(weil_subscheme(fs, Place::infinity(), pt({1, 1, 10})).value.mult() == 10);
  const auto single = testing::Ps({"x0"}, 2);
  CHECK(weil_subscheme(single, Place::prime(3), pt({3, 5})).value ==
        weil_divisor(single[0], Place::prime(3), pt({3, 5})));
  const auto two = testing::Ps({"x0", "x0 - x1"}, 3);
  CHECK(weil_subscheme(two, Place::infinity(), pt({1, 1, 1})).value.mult() == 1);
  CHECK_THROWS_AS(weil_subscheme(fs, Place::infinity(), pt({0, 0, 1})), DomainError);
}

TEST_CASE("approximation sums") {
  const PolySystem sys(testing::Ps({"x0", "x1", "x0 - x1"}, 2));
  const PlaceSet inf({Place::infinity()});
  const ApproxSum s = approx_sum(sys, inf, pt({2, 1}));
  CHECK(s.powered == Q(1, 4));
  CHECK(s.exponent_lcm == 1);
  CHECK(s.log_value == doctest::Approx(-2 * std::log(2.0)));
  CHECK(s.log_value / proj_height(pt({2, 1})).value() == doctest::Approx(-2.0));
  CHECK(approx_sum(PolySystem(testing::Ps({"x0"}, 2)), inf, pt({1, 1})).powered == 1);
  CHECK_THROWS_AS(approx_sum(sys, inf, pt({1, 1})), PointOnDivisor);
}

TEST_CASE("twisted heights") {
  WeightAssignment zero(1);
  CHECK(twisted_height(pt({3, 7}), zero, 5.0) == doctest::Approx(std::log(7.0)));
  WeightAssignment c(1);
  c.set(Place::infinity(), {Q(1), Q(0)});
  CHECK(twisted_height(pt({1, 2}), c, std::exp(1.0)) == doctest::Approx(1.0));
  WeightAssignment d(1);
  d.set(Place::infinity(), {Q(0), Q(5)});
  CHECK(twisted_height(pt({1, 0}), d, 3.0) == doctest::Approx(0.0));
  CHECK_FALSE(d.satisfies_sum_bound());
  CHECK_THROWS_AS(twisted_height(pt({1, 0}), d, 1.0), DomainError);
  CHECK_THROWS_AS(d.set(Place::prime(2), {Q(-1), Q(0)}), DomainError);
}

TEST_CASE("property: scale invariance, nonnegativity and the first main theorem") {
  std::mt19937_64 rng(4242);
  for (int k = 0; k < 200; ++k) {
    const std::size_t size = 2 + k % 3;
    const ProjPoint p = random_point(rng, size, 40);
    const Rational lambda = testing::random_rational(rng, 500);
    std::vector<Rational> scaled = p.rational_coords();
    for (Rational& x : scaled) x *= lambda;
    CHECK(proj_height(ProjPoint(std::span<const Rational>(scaled))) == proj_height(p));

    const ExactLog h = proj_height(p);
    CHECK(h.mult() >= 1);
    bool small = true;
    for (const Integer& a : p.coords()) small = small && abs(a) <= 1;
    CHECK((h.mult() == 1) == small);

    CHECK(twisted_height(p, WeightAssignment(size - 1), 2.0) == doctest::Approx(h.value()));

    const int deg = 1 + k % 3;
    const MultiPoly f = testing::random_homogeneous(rng, size, deg, 9, 3) * testing::random_rational(rng, 20);
    if (f.evaluate(p.rational_coords()) == 0) continue;
    PlaceSet places = point_support(p);
    const MultiPoly one[] = {f};
    places.merge(coefficient_support(one));
    places.merge(support(f.evaluate(p.rational_coords())));
    Rational total = 1;
    for (const Place& v : places) {
      const ExactLog l = weil_divisor(f, v, p);
      total *= l.mult();
      if (!v.is_infinite()) CHECK(l.mult() >= 1);
      if (v.is_infinite()) CHECK(l.mult() * static_cast<long>(f.size()) >= 1);
    }
    CHECK(total == pow(h.mult(), deg) * system_height(one, HeightVariant::H).mult());

    const MultiPoly g = testing::random_homogeneous(rng, size, deg, 9, 3);
    if (g.evaluate(p.rational_coords()) == 0) continue;
    const MultiPoly fg[] = {f, g};
    const ExactLog sub = weil_subscheme(fg, Place::infinity(), p).value;
    CHECK(sub <= weil_divisor(f, Place::infinity(), p));
    CHECK(sub <= weil_divisor(g, Place::infinity(), p));
  }
}
