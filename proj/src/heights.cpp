#include "qst/heights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace qst {

namespace {

std::vector<Integer> canonical(std::vector<Integer> xs) {
  Integer g = 0;
  for (const Integer& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw DomainError("projective point with all coordinates zero");
  auto first = std::find_if(xs.begin(), xs.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (Integer& x : xs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return xs;
}

}  // namespace

ProjPoint::ProjPoint(std::span<const Rational> coords) {
  if (coords.size() < 2) throw DomainError("a projective point needs at least two coordinates");
  Integer l = 1;
  for (const Rational& x : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coords.size());
  for (const Rational& x : coords) ints.push_back(x.get_num() * (l / x.get_den()));
  coords_ = canonical(std::move(ints));
}

ProjPoint::ProjPoint(std::span<const Integer> coords) {
  if (coords.size() < 2) throw DomainError("a projective point needs at least two coordinates");
  coords_ = canonical(std::vector<Integer>(coords.begin(), coords.end()));
}

ProjPoint ProjPoint::parse(std::string_view text) {
  std::vector<Rational> xs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    xs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ProjPoint(std::span<const Rational>(xs));
}

std::vector<Rational> ProjPoint::rational_coords() const {
  return std::vector<Rational>(coords_.begin(), coords_.end());
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i].get_str();
  os << ")";
  return os.str();
}

Rational point_norm(const ProjPoint& p, const Place& v) {
  Rational best = 0;
  for (const Integer& x : p.coords()) {
    if (x == 0) continue;
    Rational a = normalized_abs(Rational(x), v);
    if (a > best) best = a;
  }
  return best;
}

ExactLog proj_height(const ProjPoint& p) {
  Integer best = 0;
  for (const Integer& x : p.coords()) {
    if (abs(x) > best) best = abs(x);
  }
  return ExactLog(Rational(best));
}

PlaceSet point_support(const ProjPoint& p) {
  PlaceSet places({Place::infinity()});
  for (const Integer& x : p.coords()) {
    if (x != 0) places.merge(support(Rational(x)));
  }
  return places;
}

ExactLog weil_divisor(const MultiPoly& f, const Place& v, const ProjPoint& p) {
  auto d = f.homogeneous_degree();
  if (!d) throw DomainError("Weil function of a non-homogeneous polynomial");
  if (f.num_vars() != p.size()) throw DomainError("polynomial and point live in different spaces");
  const auto coords = p.rational_coords();
  const Rational value = f.evaluate(coords);
  if (sgn(value) == 0) throw PointOnDivisor("point " + p.to_string() + " lies on " + to_string(f));
  const MultiPoly one[] = {f};
  return ExactLog(pow(point_norm(p, v), *d) * system_norm(one, v, NormVariant::Max) / normalized_abs(value, v));
}

SubschemeWeil weil_subscheme(std::span<const MultiPoly> fs, const Place& v, const ProjPoint& p) {
  if (fs.empty()) throw DomainError("subscheme with no defining polynomials");
  std::optional<SubschemeWeil> best;
  std::vector<std::size_t> vanishing;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (sgn(fs[i].evaluate(p.rational_coords())) == 0) {
      vanishing.push_back(i);
      continue;
    }
    ExactLog value = weil_divisor(fs[i], v, p);
    if (!best || value < best->value) best = SubschemeWeil{value, i, {}};
  }
  if (!best) throw PointOnDivisor("point " + p.to_string() + " lies on the subscheme");
  best->vanishing = std::move(vanishing);
  return *best;
}

ApproxSum approx_sum(const PolySystem& system, const PlaceSet& places, const ProjPoint& p) {
  if (places.empty()) throw DomainError("approximation sum over an empty place set");
  if (system.num_vars() != p.size()) throw DomainError("system and point live in different spaces");
  const long lcm = system.degree_lcm();
  const auto coords = p.rational_coords();
  std::vector<Rational> values;
  values.reserve(system.size());
  for (const MultiPoly& f : system.polys()) {
    values.push_back(f.evaluate(coords));
    if (sgn(values.back()) == 0) throw PointOnDivisor("point " + p.to_string() + " lies on " + to_string(f));
  }
  Rational powered = 1;
  for (const Place& v : places) {
    const Rational norm = point_norm(p, v);
    for (std::size_t i = 0; i < system.size(); ++i) {
      const int d = system.degrees()[i];
      powered *= pow(normalized_abs(values[i], v) / pow(norm, d), lcm / d);
    }
  }
  return ApproxSum{powered, lcm, log_of(powered) / static_cast<double>(lcm)};
}

void WeightAssignment::set(const Place& v, std::vector<Rational> weights) {
  if (weights.size() != ambient_dim_ + 1) throw DomainError("weight tuple has the wrong length");
  for (const Rational& w : weights) {
    if (sgn(w) < 0) throw DomainError("negative weight");
  }
  per_place_[v] = std::move(weights);
}

Rational WeightAssignment::max_sum() const {
  Rational total = 0;
  for (const auto& [v, ws] : per_place_) total += *std::max_element(ws.begin(), ws.end());
  return total;
}

double twisted_height(const ProjPoint& y, const WeightAssignment& c, double q_base) {
  if (!(q_base > 1.0)) throw DomainError("twisted height needs Q > 1");
  if (c.ambient_dim() != y.ambient_dim()) throw DomainError("weights and point live in different spaces");
  PlaceSet places = point_support(y);
  for (const auto& [v, ws] : c.per_place()) places.insert(v);
  const double log_q = std::log(q_base);
  double total = 0.0;
  for (const Place& v : places) {
    auto it = c.per_place().find(v);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y.coords()[i] == 0) continue;
      double term = log_of(normalized_abs(Rational(y.coords()[i]), v));
      if (it != c.per_place().end()) term += to_double(it->second[i]) * log_q;
      best = std::max(best, term);
    }
    total += best;
  }
  return total;
}

}  // namespace qst
