#include <random>

#include "doctest.h"
#include "qst/error.hpp"
#include "qst/qarith.hpp"
#include "support.hpp"

using namespace qst;
using testing::Q;

namespace {

// Oracle: strip factors of p by repeated division.
Rational abs_at_prime_by_division(Rational x, long p) {
  Integer num = abs(x.get_num()), den = x.get_den();
  Rational out = 1;
  while (num % p == 0) {
    num /= p;
    out /= p;
  }
  while (den % p == 0) {
    den /= p;
    out *= p;
  }
  return out;
}

bool trial_division_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normalized absolute values of the worked examples") {
  CHECK(normalized_abs(Q(12), Place::prime(2)) == Q(1, 4));
  CHECK(normalized_abs(Q(-3, 8), Place::infinity()) == Q(3, 8));
  CHECK(normalized_abs(Q(5), Place::prime(3)) == Q(1));
  CHECK_THROWS_AS(normalized_abs(Q(0), Place::prime(3)), DomainError);
}

TEST_CASE("support of a rational") {
  CHECK(support(Q(12)) == PlaceSet({Place::infinity(), Place::prime(2), Place::prime(3)}));
  CHECK(support(Q(1)) == PlaceSet({Place::infinity()}));
  CHECK(support(Q(-3, 8)) == PlaceSet({Place::infinity(), Place::prime(2), Place::prime(3)}));
  CHECK_THROWS_AS(support(Q(0)), DomainError);
}

TEST_CASE("product formula on the worked examples") {
  CHECK(product_over_places(Q(-3, 8)) == 1);
  CHECK(product_over_places(Q(1)) == 1);
  CHECK(product_over_places(Q(360, 7)) == 1);
  CHECK(support(Q(360, 7)).size() == 5);
  CHECK_THROWS_AS(product_over_places(Q(0)), DomainError);
}

TEST_CASE("property: product formula, multiplicativity and the ultrametric inequality") {
  std::mt19937_64 rng(20240611);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int k = 0; k < 300; ++k) {
    const Rational x = testing::random_rational(rng, 100000);
    const Rational y = testing::random_rational(rng, 100000);
    CHECK(product_over_places(x) == 1);
    CHECK(normalized_abs(x * y, Place::infinity()) ==
          normalized_abs(x, Place::infinity()) * normalized_abs(y, Place::infinity()));
    for (long p : primes) {
      const Place v = Place::prime(p);
      CHECK(normalized_abs(x, v) == abs_at_prime_by_division(x, p));
      CHECK(normalized_abs(x * y, v) == normalized_abs(x, v) * normalized_abs(y, v));
      if (x + y != 0) CHECK(normalized_abs(x + y, v) <= std::max(normalized_abs(x, v), normalized_abs(y, v)));
    }
    CHECK(support(x) == support(x));
  }
}

TEST_CASE("valuations and factorization agree with direct reconstruction") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (int k = 0; k < 200; ++k) {
    const Integer n = dist(rng);
    Integer back = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(valuation(Rational(n), p) == static_cast<long>(e));
      for (unsigned i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == n);
  }
  for (long n = 0; n < 3000; ++n) CHECK(is_prime(Integer(n)) == trial_division_prime(n));
  CHECK(is_prime(Integer("1000000000039")));
  CHECK_FALSE(is_prime(Integer("1000000000037")));
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Q(-3, 2));
  CHECK(parse_rational("0.125") == Q(1, 8));
  CHECK(to_string(Q(6, 4)) == "3/2");
  CHECK(to_string(Q(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("places are ordered with infinity first") {
  CHECK(Place::infinity() < Place::prime(2));
  CHECK(Place::prime(3) < Place::prime(5));
  CHECK(Place::parse("inf").is_infinite());
  CHECK(Place::parse("7").p() == 7);
  CHECK_THROWS_AS(Place::prime(4), DomainError);
  PlaceSet s;
  s.insert(Place::prime(5));
  s.insert(Place::infinity());
  s.insert(Place::prime(5));
  CHECK(s.size() == 2);
  CHECK(s.places().front().is_infinite());
}
