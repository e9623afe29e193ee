#pragma once

// Exact rationals, rational primes and the normalized absolute values of Q.
//
// Over Q every place has local degree one, so the normalized absolute values
// are |x|_inf = |x| and |x|_p = p^(-v_p(x)); with this choice the product
// formula prod_v |x|_v = 1 holds for every nonzero x and is checked exactly.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qst {

using Integer = mpz_class;
/// GMP rationals are kept canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a", "-a", "a/b" or a decimal "a.bcd" (read exactly).
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Natural logarithm of a positive rational, safe for huge numerators.
double log_of(const Rational& x);
double to_double(const Rational& x);

Rational pow(const Rational& base, long exponent);

/// Deterministic: trial division below 2^40, strong-pseudoprime bases above.
bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// A place of Q: the archimedean place or a rational prime.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws DomainError unless p is prime.
  static Place prime(const Integer& p);
  /// "inf" or a decimal prime.
  static Place parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful for finite places.
  const Integer& p() const noexcept { return prime_; }

  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b);
  /// Infinity first, then primes ascending.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Place() = default;
  bool infinite_ = true;
  Integer prime_ = 0;
};

/// Sorted duplicate-free list of places (infinity first).
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<Place> places);

  void insert(const Place& v);
  void merge(const PlaceSet& other);
  bool contains(const Place& v) const;

  std::size_t size() const noexcept { return places_.size(); }
  bool empty() const noexcept { return places_.empty(); }
  auto begin() const { return places_.begin(); }
  auto end() const { return places_.end(); }
  const std::vector<Place>& places() const noexcept { return places_; }

  friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

 private:
  std::vector<Place> places_;
};

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& x, const Integer& p);

/// Exact value of the normalized absolute value |x|_v. x must be nonzero.
Rational normalized_abs(const Rational& x, const Place& v);

/// Places where |x|_v != 1, plus infinity.
PlaceSet support(const Rational& x);

/// Product of |x|_v over support(x); equals 1 by the product formula.
Rational product_over_places(const Rational& x);

}  // namespace qst
