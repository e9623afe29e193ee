#include "qst/qarith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qst/error.hpp"

namespace qst {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_natural(std::string_view s, std::string_view whole, std::size_t offset) {
  if (!all_digits(s)) throw ParseError("invalid rational '" + std::string(whole) + "'", offset);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::size_t lead = static_cast<std::size_t>(s.data() - text.data());
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_natural(s.substr(0, slash), text, lead);
    Integer den = parse_natural(s.substr(slash + 1), text, lead + slash + 1);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", lead + slash + 1);
    value = make_rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("invalid rational '" + std::string(text) + "'", lead);
    Integer whole = ip.empty() ? Integer(0) : parse_natural(ip, text, lead);
    Integer frac = fp.empty() ? Integer(0) : parse_natural(fp, text, lead + dot + 1);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    value = make_rational(whole * scale + frac, scale);
  } else {
    value = Rational(parse_natural(s, text, lead));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

double log_of_integer(const Integer& n) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

double log_of(const Rational& x) {
  if (sgn(x) <= 0) throw DomainError("logarithm of a non-positive rational");
  return log_of_integer(x.get_num()) - log_of_integer(x.get_den());
}

double to_double(const Rational& x) { return x.get_d(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);  // already in lowest terms
}

namespace {

const Integer kTrialLimit = Integer(1) << 20;

bool strong_probable_prime(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  Integer x;
  Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; n composite and odd.
Integer find_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = find_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < kTrialLimit * kTrialLimit) {
    for (unsigned long d = 41; Integer(d) * d <= n; d += 2) {
      if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return false;
    }
    return true;
  }
  for (unsigned long base : small) {
    if (!strong_probable_prime(n, base)) return false;
  }
  return true;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& value) {
  if (value == 0) throw DomainError("factorization of zero");
  Integer n = abs(value);
  std::vector<Integer> primes;
  for (unsigned long d = 2; d < (1ul << 20); d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const Integer& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());
  Place v;
  v.infinite_ = false;
  v.prime_ = p;
  return v;
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  if (!all_digits(text)) throw ParseError("invalid place '" + std::string(text) + "'", 0);
  return prime(Integer(std::string(text), 10));
}

std::string Place::to_string() const { return infinite_ ? "inf" : prime_.get_str(); }

bool operator==(const Place& a, const Place& b) {
  return a.infinite_ == b.infinite_ && (a.infinite_ || a.prime_ == b.prime_);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.prime_, b.prime_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

void PlaceSet::insert(const Place& v) {
  auto it = std::lower_bound(places_.begin(), places_.end(), v);
  if (it == places_.end() || !(*it == v)) places_.insert(it, v);
}

void PlaceSet::merge(const PlaceSet& other) {
  std::vector<Place> merged;
  merged.reserve(places_.size() + other.places_.size());
  std::set_union(places_.begin(), places_.end(), other.places_.begin(), other.places_.end(),
                 std::back_inserter(merged));
  places_ = std::move(merged);
}

bool PlaceSet::contains(const Place& v) const { return std::binary_search(places_.begin(), places_.end(), v); }

long valuation(const Rational& x, const Integer& p) {
  if (sgn(x) == 0) throw DomainError("valuation of zero");
  long v = 0;
  Integer t = x.get_num();
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  t = x.get_den();
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    --v;
  }
  return v;
}

Rational normalized_abs(const Rational& x, const Place& v) {
  if (sgn(x) == 0) throw DomainError("absolute value of zero is excluded");
  if (v.is_infinite()) return abs(x);
  return pow(Rational(v.p()), -valuation(x, v.p()));
}

PlaceSet support(const Rational& x) {
  if (sgn(x) == 0) throw DomainError("support of zero");
  std::vector<Place> places{Place::infinity()};
  for (const auto& part : {x.get_num(), x.get_den()}) {
    if (abs(part) == 1) continue;
    for (const auto& [p, e] : factorize(part)) places.push_back(Place::prime(p));
  }
  return PlaceSet(std::move(places));
}

Rational product_over_places(const Rational& x) {
  Rational prod = 1;
  for (const Place& v : support(x)) prod *= normalized_abs(x, v);
  return prod;
}

}  // namespace qst
