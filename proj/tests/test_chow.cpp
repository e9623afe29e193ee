#include <optional>
#include <random>

#include "doctest.h"
#include "qst/chow.hpp"
#include "qst/error.hpp"
#include "support.hpp"

using namespace qst;
using testing::I;
using testing::P;
using testing::Q;

namespace {

// Two lines u0, u1 of P^2 meet at u0 x u1, so the Chow form of a plane curve V(f)
// is f(u0 x u1) up to a constant.
MultiPoly plane_curve_oracle(const MultiPoly& f) {
  const std::size_t nv = 6;
  auto u = [&](int i, int j) { return MultiPoly::variable(nv, static_cast<std::size_t>(3 * i + j)); };
  const std::vector<MultiPoly> cross{u(0, 1) * u(1, 2) - u(0, 2) * u(1, 1), u(0, 2) * u(1, 0) - u(0, 0) * u(1, 2),
                                     u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0)};
  return f.substitute(cross);
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.size() != b.size() || a.is_zero()) return false;
  const Rational ratio = a.terms().begin()->second / b.coefficient(a.terms().begin()->first);
  return a == b * ratio;
}

std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t size) {
  std::uniform_int_distribution<long> d(0, 20);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < size; ++i) c.push_back(Q(d(rng), 1 + d(rng) % 5));
  return c;
}

}  // namespace

TEST_CASE("Chow forms of the worked examples") {
  const ChowForm line = chow_form(Ideal(2), 1);
  CHECK(proportional(line.poly(), parse_poly("u00*u11 - u01*u10", line.var_names())));
  const ChowForm point = chow_form(I({"2*x0 - x1"}, 2), 0);
  CHECK(point.poly() == parse_poly("u00 + 2*u01", point.var_names()));
  const ChowForm conic = chow_form(I({"x0*x2 - x1^2"}, 3), 1);
  CHECK(conic.block_degree() == 2);
  CHECK(conic.poly().num_vars() == 6);
  CHECK(proportional(conic.poly(), plane_curve_oracle(P("x0*x2 - x1^2", 3))));
  CHECK_THROWS_AS(chow_form(I({"x0*x2 - x1^2"}, 3), 0), PreconditionError);
}

TEST_CASE("Chow form of the plane is the 3x3 determinant") {
  const ChowForm plane = chow_form(Ideal(3), 2);
  const auto det = parse_poly(
      "u00*u11*u22 - u00*u12*u21 - u01*u10*u22 + u01*u12*u20 + u02*u10*u21 - u02*u11*u20", plane.var_names());
  CHECK(proportional(plane.poly(), det));
}

TEST_CASE("Chow weights") {
  const ChowForm line = chow_form(Ideal(2), 1);
  const Rational c35[] = {3, 5};
  CHECK(chow_weight(line, c35) == 8);
  const ChowForm point = chow_form(I({"2*x0 - x1"}, 2), 0);
  const Rational c25[] = {2, 5};
  CHECK(chow_weight(point, c25) == 5);

  WeightAssignment zero(1);
  CHECK(chow_weight_aggregate(line, zero) == 0);
  WeightAssignment one(1);
  one.set(Place::infinity(), {Q(1), Q(0)});
  CHECK(chow_weight_aggregate(line, one) == Q(1, 2));
  WeightAssignment two(1);
  two.set(Place::infinity(), {Q(1, 2), Q(0)});
  two.set(Place::prime(2), {Q(1, 2), Q(0)});
  CHECK(chow_weight_aggregate(line, two) == Q(1, 2));
  WeightAssignment over(1);
  over.set(Place::infinity(), {Q(0), Q(5)});
  CHECK_THROWS_AS(chow_weight_aggregate(line, over), PreconditionError);
}

TEST_CASE("property: hypersurface Chow forms match the cross-product oracle") {
  std::mt19937_64 rng(77);
  int compared = 0;
  for (int k = 0; k < 9; ++k) {
    const int deg = 1 + k % 3;
    const MultiPoly f = testing::random_homogeneous(rng, 3, deg, 4, 3);
    const Ideal x(3, {f});
    if (projective_dimension(x) != 1) continue;
    std::optional<ChowForm> form;
    try {
      form = chow_form(x, 1);
    } catch (const PreconditionError&) {
      continue;  // reducible curve: elimination is not principal
    }
    CHECK(form->block_degree() == deg);
    CHECK(proportional(form->poly(), plane_curve_oracle(f)));
    ++compared;
  }
  CHECK(compared >= 4);
}

TEST_CASE("property: shift covariance and monotonicity of Chow weights") {
  std::mt19937_64 rng(1234);
  const ChowForm forms[] = {chow_form(Ideal(2), 1), chow_form(I({"x0*x2 - x1^2"}, 3), 1), chow_form(Ideal(3), 2),
                            chow_form(I({"x0 + x1 + x2"}, 3), 1)};
  for (const ChowForm& form : forms) {
    const long scale = static_cast<long>(form.dim() + 1) * form.block_degree();
    for (int k = 0; k < 25; ++k) {
      const auto c = random_weights(rng, form.ambient() + 1);
      const Rational t = Q(static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 7));
      std::vector<Rational> shifted = c, bigger = c;
      for (Rational& x : shifted) x += t;
      for (Rational& x : bigger) x += Q(static_cast<long>(rng() % 5), 3);
      CHECK(chow_weight(form, shifted) == chow_weight(form, c) + Rational(scale) * t);
      CHECK(chow_weight(form, c) <= chow_weight(form, bigger));
    }
    std::vector<Rational> flat(form.ambient() + 1, Q(7, 3));
    CHECK(chow_weight(form, flat) == Rational(scale) * Q(7, 3));
  }
}

TEST_CASE("image varieties") {
  const ImageVariety veronese = image_variety(Ideal(2), testing::Ps({"x0^2", "x0*x1", "x1^2"}, 2));
  CHECK(groebner_basis(veronese.ideal).basis() == groebner_basis(I({"x0*x2 - x1^2"}, 3)).basis());
  CHECK(veronese.dim_y == 1);
  CHECK(veronese.degree_y == 2);
  const ImageVariety id = image_variety(Ideal(2), testing::Ps({"x0", "x1"}, 2));
  CHECK(id.ideal.is_zero());
  const ImageVariety conic = image_variety(I({"x0*x2 - x1^2"}, 3), testing::Ps({"x0", "x1", "x2"}, 3));
  CHECK(groebner_basis(conic.ideal) == groebner_basis(I({"x0*x2 - x1^2"}, 3)));
  CHECK_THROWS_AS(image_variety(Ideal(2), testing::Ps({"x0", "x0"}, 2)), DomainError);
  const ImageVariety squares = image_variety(Ideal(2), testing::Ps({"x0^2", "x1^2"}, 2));
  CHECK(squares.degree_y <= squares.degree_x * 2);
}

TEST_CASE("Chow-weight lower bounds") {
  const ChowForm line = chow_form(Ideal(2), 1);
  const Rational c[] = {Q(2, 3), Q(5, 7)};
  const ChowBoundReport a = thm22_report(Ideal(2), line, {0, 1}, c, ChowBoundMode::EmptyIntersection, Q(1));
  CHECK(a.lhs == Q(2, 3) + Q(5, 7));
  CHECK(a.rhs == a.lhs);
  CHECK(a.equality);

  const ChowForm plane = chow_form(Ideal(3), 2);
  const Rational ones[] = {1, 1, 1};
  const ChowBoundReport b = thm22_report(Ideal(3), plane, {0, 1, 2}, ones, ChowBoundMode::EmptyIntersection, Q(1));
  CHECK(b.lhs == 3);
  CHECK(b.rhs == 3);
  CHECK(b.equality);

  const Ideal in_h0 = I({"x0"}, 3);
  const ChowForm f0 = chow_form(in_h0, 1);
  try {
    thm22_report(in_h0, f0, {0, 1, 2}, ones, ChowBoundMode::EmptyIntersection, Q(3));
    FAIL("expected a hypothesis failure");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("Y not contained in H_0") != std::string::npos);
  }
}
