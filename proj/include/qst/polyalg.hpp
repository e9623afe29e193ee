#pragma once

// Multivariate polynomials over Q with a sparse term map.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qst/exact_log.hpp"
#include "qst/qarith.hpp"

namespace qst {

/// Exponent vector; one entry per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exps);
  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, ...): returns this / other.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Lexicographic on the exponent vector; used only as a map key.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Graded-lexicographic comparison, used for display and coefficient vectors.
bool grlex_greater(const Monomial& a, const Monomial& b);

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}
  MultiPoly(std::size_t num_vars, TermMap terms);

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(const Monomial& m, const Rational& c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Common degree of all terms, or nullopt when not homogeneous (or zero).
  std::optional<int> homogeneous_degree() const;
  /// Degree in the variables flagged in `subset`.
  std::optional<int> homogeneous_degree_in(const std::vector<bool>& subset) const;
  /// True when no term involves a variable flagged in `subset`.
  bool free_of(const std::vector<bool>& subset) const;

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly pow(unsigned exponent) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces x_i by images[i]; all images share one ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Moves variable i to index var_map[i] in a ring of new_num_vars variables.
  MultiPoly rename(std::size_t new_num_vars, std::span<const std::size_t> var_map) const;
  /// Same polynomial in a ring with more variables appended at the end.
  MultiPoly extend(std::size_t new_num_vars) const;

  /// Coefficients in graded-lexicographic descending monomial order.
  std::vector<Rational> coefficients_grlex() const;
  /// Divides by the leading (grlex) coefficient.
  MultiPoly monic_grlex() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& f);

/// Default variable names x0, x1, ...
std::vector<std::string> default_var_names(std::size_t num_vars);

/// Prints in graded-lex descending order, e.g. "2*x0^2 + 3*x1^2 - 1/2*x0*x2".
std::string to_string(const MultiPoly& f);
std::string to_string(const MultiPoly& f, const std::vector<std::string>& names);

/// Grammar: variables x0..x{n-1}; integer or a/b literals; + - * ^; parentheses.
/// Rejects syntax errors (with position), out-of-range variables and the zero polynomial.
MultiPoly parse_poly(std::string_view text, std::size_t num_vars);
/// Same grammar with an explicit variable name table.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& names);
/// Like parse_poly but accepts the zero polynomial.
MultiPoly parse_poly_allow_zero(std::string_view text, const std::vector<std::string>& names);

/// Nonempty list of nonzero homogeneous polynomials over one ring.
class PolySystem {
 public:
  explicit PolySystem(std::vector<MultiPoly> polys);

  const std::vector<MultiPoly>& polys() const noexcept { return polys_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return polys_.size(); }
  std::size_t num_vars() const noexcept { return polys_.front().num_vars(); }
  /// lcm of the member degrees.
  long degree_lcm() const;

 private:
  std::vector<MultiPoly> polys_;
  std::vector<int> degrees_;
};

enum class NormVariant { Max, Sum };
enum class HeightVariant { H, H1 };

/// ||f_1..f_r||_v (Max) or ||f_1..f_r||_{v,1} (Sum); Sum differs only at infinity.
Rational system_norm(std::span<const MultiPoly> polys, const Place& v, NormVariant variant);

/// All places where some coefficient is not a unit, plus infinity.
PlaceSet coefficient_support(std::span<const MultiPoly> polys);

/// h (product of Max norms) or h_1 (product of Sum norms) over all places.
ExactLog system_height(std::span<const MultiPoly> polys, HeightVariant variant);

}  // namespace qst
