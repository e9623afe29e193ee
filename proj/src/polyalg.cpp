#include "qst/polyalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qst/error.hpp"

namespace qst {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  Monomial m(num_vars);
  m.exps_.at(index) = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(std::size_t num_vars, TermMap terms) : num_vars_(num_vars) {
  for (auto& [m, c] : terms) {
    if (m.num_vars() != num_vars) throw DomainError("monomial length does not match the ring");
    if (sgn(c) != 0) terms_.emplace(m, c);
  }
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly f(num_vars);
  f.add_term(Monomial(num_vars), c);
  return f;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  MultiPoly f(num_vars);
  f.add_term(Monomial::variable(num_vars, index), 1);
  return f;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly f(m.num_vars());
  f.add_term(m, c);
  return f;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_) throw DomainError("monomial length does not match the ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree_in(const std::vector<bool>& subset) const {
  if (terms_.empty()) return std::nullopt;
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (subset[i]) dm += m[i];
    }
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

bool MultiPoly::free_of(const std::vector<bool>& subset) const {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (subset[i] && m[i] > 0) return false;
    }
  }
  return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.num_vars_ != num_vars_) throw DomainError("adding polynomials from different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.num_vars_ != num_vars_) throw DomainError("subtracting polynomials from different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  out -= other;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  if (other.num_vars_ != num_vars_) throw DomainError("multiplying polynomials from different rings");
  MultiPoly out(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly(num_vars_);
  MultiPoly out = *this;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& f) { return f * c; }

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(num_vars_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw DomainError("point length does not match the number of variables");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_ && sgn(t) != 0; ++i) {
      if (m[i] > 0) t *= qst::pow(point[i], m[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != num_vars_) throw DomainError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const std::size_t target = images.front().num_vars();
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      t = t * cache[e];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::rename(std::size_t new_num_vars, std::span<const std::size_t> var_map) const {
  if (var_map.size() != num_vars_) throw DomainError("variable map has the wrong length");
  MultiPoly out(new_num_vars);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(new_num_vars, 0);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (var_map[i] >= new_num_vars) throw DomainError("variable map target out of range");
      e[var_map[i]] += m[i];
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

MultiPoly MultiPoly::extend(std::size_t new_num_vars) const {
  std::vector<std::size_t> map(num_vars_);
  std::iota(map.begin(), map.end(), 0);
  return rename(new_num_vars, map);
}

namespace {

std::vector<const MultiPoly::TermMap::value_type*> grlex_sorted(const MultiPoly& f) {
  std::vector<const MultiPoly::TermMap::value_type*> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });
  return ts;
}

}  // namespace

std::vector<Rational> MultiPoly::coefficients_grlex() const {
  std::vector<Rational> out;
  for (auto* t : grlex_sorted(*this)) out.push_back(t->second);
  return out;
}

MultiPoly MultiPoly::monic_grlex() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / grlex_sorted(*this).front()->second);
}

std::vector<std::string> default_var_names(std::size_t num_vars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const MultiPoly& f) { return to_string(f, default_var_names(f.num_vars())); }

std::string to_string(const MultiPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto* t : grlex_sorted(f)) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    bool need_star = false;
    if (c != 1 || m.is_one()) {
      os << to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << names.at(i);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  MultiPoly parse() {
    MultiPoly f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  MultiPoly expr() {
    MultiPoly f = term();
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  MultiPoly term() {
    MultiPoly f = unary();
    while (accept('*')) f = f * unary();
    return f;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      Integer e = number();
      if (e > 1000) {
        pos_ = at;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = number();
      Integer den = 1;
      if (accept('/')) {
        den = number();
        if (den == 0) fail("zero denominator");
      }
      return MultiPoly::constant(names_.size(), make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), ident);
      if (it == names_.end()) {
        pos_ = start;
        if (ident.size() > 1 && ident[0] == 'x' &&
            std::all_of(ident.begin() + 1, ident.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
          fail("variable " + std::string(ident) + " out of range (" + std::to_string(names_.size()) + " variables)");
        }
        fail("unknown variable '" + std::string(ident) + "'");
      }
      return MultiPoly::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly_allow_zero(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  MultiPoly f = parse_poly_allow_zero(text, names);
  if (f.is_zero()) throw DomainError("zero polynomial: '" + std::string(text) + "'");
  return f;
}

MultiPoly parse_poly(std::string_view text, std::size_t num_vars) {
  if (num_vars == 0) throw DomainError("a polynomial ring needs at least one variable");
  return parse_poly(text, default_var_names(num_vars));
}

// -------------------------------------------------------------- PolySystem

PolySystem::PolySystem(std::vector<MultiPoly> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw DomainError("empty polynomial system");
  for (const MultiPoly& f : polys_) {
    if (f.num_vars() != polys_.front().num_vars()) throw DomainError("system members live in different rings");
    if (f.is_zero()) throw DomainError("system member is identically zero");
    auto d = f.homogeneous_degree();
    if (!d) throw DomainError("system member is not homogeneous: " + to_string(f));
    if (*d < 1) throw DomainError("system member is a constant: " + to_string(f));
    degrees_.push_back(*d);
  }
}

long PolySystem::degree_lcm() const {
  long l = 1;
  for (int d : degrees_) l = std::lcm(l, static_cast<long>(d));
  return l;
}

// ------------------------------------------------------- norms and heights

Rational system_norm(std::span<const MultiPoly> polys, const Place& v, NormVariant variant) {
  if (polys.empty()) throw DomainError("norm of an empty polynomial list");
  Rational acc = 0;
  const bool sum = variant == NormVariant::Sum && v.is_infinite();
  for (const MultiPoly& f : polys) {
    if (f.is_zero()) throw DomainError("norm of a zero polynomial");
    for (const auto& [m, c] : f.terms()) {
      Rational a = normalized_abs(c, v);
      if (sum) {
        acc += a;
      } else if (a > acc) {
        acc = a;
      }
    }
  }
  return acc;
}

PlaceSet coefficient_support(std::span<const MultiPoly> polys) {
  PlaceSet places({Place::infinity()});
  for (const MultiPoly& f : polys) {
    for (const auto& [m, c] : f.terms()) places.merge(support(c));
  }
  return places;
}

ExactLog system_height(std::span<const MultiPoly> polys, HeightVariant variant) {
  if (polys.empty()) throw DomainError("height of an empty polynomial list");
  const NormVariant nv = variant == HeightVariant::H ? NormVariant::Max : NormVariant::Sum;
  Rational prod = 1;
  for (const Place& v : coefficient_support(polys)) prod *= system_norm(polys, v, nv);
  return ExactLog(prod);
}

}  // namespace qst
