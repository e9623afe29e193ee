#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "qst/audit.hpp"
#include "qst/error.hpp"
#include "qst/io.hpp"
#include "support.hpp"

using namespace qst;
using testing::I;
using testing::Q;

namespace {

std::vector<std::string> names(const std::vector<ProjPoint>& pts) {
  std::vector<std::string> out;
  for (const ProjPoint& p : pts) out.push_back(p.to_string());
  return out;
}

// Independent double loop: coprime pairs up to sign.
std::size_t brute_force_count_p1(long bound) {
  std::size_t count = 0;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      if (a > 0 || (a == 0 && b > 0)) ++count;
    }
  }
  return count;
}

// prod_v prod_i (|f_i(P)|_v / |P|_v^{deg f_i})^{L / deg f_i}, built from normalized absolute values only.
Rational exact_sum_power(const PolySystem& sys, const PlaceSet& s, const ProjPoint& p, long lcm) {
  Rational out = 1;
  for (const Place& v : s) {
    const Rational norm = point_norm(p, v);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const Rational val = normalized_abs(sys.polys()[i].evaluate(p.rational_coords()), v);
      const long deg = sys.degrees()[i];
      out *= pow(val / pow(norm, deg), lcm / deg);
    }
  }
  return out;
}

AuditConfig p1_config(long bound, Rational exponent, Rational delta) {
  return AuditConfig{PolySystem(testing::Ps({"x0", "x1", "x0 - x1"}, 2)), Ideal(2), PlaceSet({Place::infinity()}),
                     exponent, delta, bound, true, 0, 0};
}

}  // namespace

TEST_CASE("enumeration of small heights") {
  CHECK(names(enumerate_points(1, 1)) == std::vector<std::string>{"(0:1)", "(1:-1)", "(1:0)", "(1:1)"});
  const auto two = enumerate_points(1, 2);
  CHECK(two.size() == 8);
  const auto two_names = names(two);
  const std::set<std::string> got(two_names.begin(), two_names.end());
  for (const char* p : {"(2:1)", "(1:2)", "(2:-1)", "(1:-2)"}) CHECK(got.count(p) == 1);
  for (const ProjPoint& p : enumerate_points(2, 6, I({"x0*x2 - x1^2"}, 3))) {
    CHECK(p.coords()[0] * p.coords()[2] == p.coords()[1] * p.coords()[1]);
  }
  CHECK_THROWS_AS(enumerate_points(1, 0), DomainError);
}

TEST_CASE("property: enumeration counts match a double loop and contain no duplicates") {
  for (long b : {1L, 2L, 3L, 7L, 20L, 50L}) {
    const auto pts = enumerate_points(1, b);
    CHECK(pts.size() == brute_force_count_p1(b));
    const auto n = names(pts);
    CHECK(std::set<std::string>(n.begin(), n.end()).size() == n.size());
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(proj_height(pts[i - 1]) <= proj_height(pts[i]));
  }
}

TEST_CASE("audit rows of the worked example") {
  const AuditReport r = audit(p1_config(3, Q(2), Q(1, 2)));
  const AuditRow* row = nullptr;
  for (const AuditRow& x : r.rows) {
    if (x.point.to_string() == "(2:1)") row = &x;
  }
  REQUIRE(row != nullptr);
  CHECK(row->lhs == doctest::Approx(-2 * std::log(2.0)));
  CHECK(row->ratio == doctest::Approx(-2.0));
  CHECK_FALSE(row->flagged);
  CHECK(r.summary.on_divisors == 3);
  CHECK(names(r.divisor_points) == std::vector<std::string>{"(0:1)", "(1:0)", "(1:1)"});

  AuditConfig empty = p1_config(3, Q(2), Q(1, 2));
  empty.places = PlaceSet();
  CHECK_THROWS_AS(audit(empty), PreconditionError);
  CHECK_THROWS_AS(audit(p1_config(3, Q(0), Q(1, 2))), PreconditionError);
  AuditConfig common = p1_config(3, Q(2), Q(0));
  common.system = PolySystem(testing::Ps({"x0", "x0"}, 2));
  CHECK_THROWS_AS(audit(common), PreconditionError);
}

TEST_CASE("property: flagged rows are exactly those passing the exact predicate") {
  const PlaceSet places({Place::infinity(), Place::prime(2), Place::prime(3)});
  for (const Rational& threshold : {Q(1), Q(3, 2), Q(2)}) {
    AuditConfig cfg{PolySystem(testing::Ps({"x0", "x1", "x0 - x1", "x0 + x1"}, 2)), Ideal(2), places, threshold, 0, 40,
                    true, 0, 1};
    const AuditReport r = audit(cfg);
    CHECK(r.summary.evaluated == r.rows.size());
    for (const AuditRow& row : r.rows) {
      const Rational x = exact_sum_power(cfg.system, places, row.point, 1);
      const Rational h = proj_height(row.point).mult();
      const bool exact = h > 1 && pow(x, threshold.get_den().get_si()) * pow(h, threshold.get_num().get_si()) <= 1;
      CHECK(row.flagged == exact);
    }
  }
}

TEST_CASE("audit reports are deterministic across runs and thread counts") {
  AuditConfig cfg = p1_config(40, Q(1), Q(1, 4));
  cfg.keep_all_rows = false;
  cfg.seed = 9;
  const std::string a = audit_to_json(cfg, audit(cfg), std::nullopt).dump();
  cfg.threads = 3;
  const std::string b = audit_to_json(cfg, audit(cfg), std::nullopt).dump();
  CHECK(a == b);
  CHECK(audit_to_csv(audit(cfg)).rfind("point,h,lhs,ratio,flagged\n", 0) == 0);
}

TEST_CASE("proof inequality pipeline") {
  ProofCheckOptions opts;
  opts.samples = 20;
  const ProofCheckReport a = proof_inequality_report(Ideal(2), PolySystem(testing::Ps({"x0", "x1"}, 2)), opts);
  CHECK(a.h_y == 0.0);
  CHECK(a.holds_h1);
  CHECK(a.holds_hy);
  CHECK(a.holds_weights);
  const ProofCheckReport b = proof_inequality_report(Ideal(2), PolySystem(testing::Ps({"x0", "x1^2"}, 2)), opts);
  CHECK(b.params.delta_deg == 2);
  CHECK(b.g == testing::Ps({"x0^2", "x1^2"}, 2));
  CHECK(b.image->dim_y == 1);
  CHECK(b.holds_h1);
  CHECK(b.holds_hy);

  WeightAssignment concentrated(1);
  concentrated.set(Place::infinity(), {Q(1), Q(0)});
  CHECK(chow_weight_aggregate(*b.chow_y, concentrated) >= b.weight_bound);

  ProofCheckOptions low;
  low.delta_x = Q(1, 2);
  CHECK_THROWS_AS(proof_inequality_report(Ideal(3), PolySystem(testing::Ps({"x0", "x1", "x0 + x1", "x2"}, 3)), low),
                  PreconditionError);
}

TEST_CASE("JSON and CSV round trips") {
  const Ideal conic = I({"x0*x2 - x1^2"}, 3);
  CHECK(groebner_basis(ideal_from_json(ideal_to_json(conic))) == groebner_basis(conic));
  CHECK(ideal_from_json(parse_json_text(R"({"vars": 3, "gens": []})")).is_zero());
  const ChowForm form = chow_form(conic, 1);
  CHECK(chow_from_json(chow_to_json(form)).poly() == form.poly());
  const CoveringSet w = covering_set(3, Q(1, 2));
  CHECK(covering_from_csv(covering_to_csv(w), Q(1, 2)).size() == w.size());
  CHECK_THROWS_AS(covering_from_csv("1/2,1/2\n", Q(1, 2)), ParseError);
  CHECK_THROWS_AS(parse_json_text("{\"vars\": 3,"), ParseError);
  CHECK_THROWS_AS(ideal_from_json(parse_json_text(R"({"gens": []})")), ParseError);
  const DivisorFamily fam = family_from_json(parse_json_text(
      R"({"X": {"vars": 3, "gens": []}, "mode": "divisor", "members": ["x0", "x1", "x0 + x1"]})"));
  CHECK(distributive_constant(fam).value == Q(3, 2));
}
