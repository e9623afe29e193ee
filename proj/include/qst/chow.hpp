#pragma once

// Chow forms by elimination, Chow weights, image varieties under
// polynomial maps, and the Chow-weight lower bounds for coordinate
// hyperplane families.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qst/groebner.hpp"
#include "qst/heights.hpp"

namespace qst {

/// A polynomial in n+1 blocks of N+1 variables u_ij, stored at index i*(N+1)+j.
class ChowForm {
 public:
  /// Checks that `poly` is homogeneous of one common degree in every block.
  ChowForm(MultiPoly poly, std::size_t n, std::size_t ambient);

  const MultiPoly& poly() const noexcept { return poly_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t ambient() const noexcept { return big_n_; }
  int block_degree() const noexcept { return block_degree_; }

  static std::size_t var_index(std::size_t i, std::size_t j, std::size_t ambient) { return i * (ambient + 1) + j; }
  /// "u00", "u01", ... ; indices are separated by an underscore once they exceed one digit.
  std::vector<std::string> var_names() const;

 private:
  MultiPoly poly_;
  std::size_t n_;
  std::size_t big_n_;
  int block_degree_ = 0;
};

std::vector<std::string> chow_var_names(std::size_t n, std::size_t ambient);

/// Chow form of the irreducible variety V(X) of dimension n, normalized monic at its
/// graded reverse lexicographic leading term.
ChowForm chow_form(const Ideal& x, int n, const Budget& budget = {});

/// e_X(c): the largest c-weighted degree sum_ij e_ij c_j over the monomials of the form.
Rational chow_weight(const ChowForm& form, std::span<const Rational> c);

/// E(c) = (sum_v e(c_v)) / ((n+1) D). Throws PreconditionError when the weights break the sum bound.
Rational chow_weight_aggregate(const ChowForm& form, const WeightAssignment& c);

struct ImageVariety {
  Ideal ideal;        // in the y-variables
  int dim_x = 0;
  int dim_y = 0;
  Integer degree_x;
  Integer degree_y;
  int map_degree = 0; // common degree of the g_i
};

/// Closure of the image of X under x -> (g_0(x) : ... : g_R(x)).
/// Throws DomainError when the g_i have a common zero on X; verifies dim Y = dim X
/// and deg Y <= deg X * (deg g)^n.
ImageVariety image_variety(const Ideal& x, const std::vector<MultiPoly>& g, const Budget& budget = {});

enum class ChowBoundMode { Filtered, EmptyIntersection };

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct ChowBoundReport {
  ChowBoundMode mode = ChowBoundMode::EmptyIntersection;
  std::vector<std::size_t> indices;
  std::size_t n = 0;
  std::size_t m = 0;
  Integer degree;
  Rational delta_y;      // distributive constant of the selected hyperplanes on Y
  Rational delta_used;   // delta entering the bound
  Rational weight_sum;   // c_{i_0} + ... + c_{i_m}
  Rational lhs;          // e_Y(c)
  Rational rhs;
  bool holds = false;
  bool equality = false;
  std::vector<Hypothesis> hypotheses;
};

/// Lower bound for the Chow weight of Y with respect to the coordinate hyperplanes
/// y_{i_0}, ..., y_{i_m}. Every hypothesis is checked; failures throw PreconditionError
/// naming each one, and a violated bound throws InternalAssertion.
ChowBoundReport thm22_report(const Ideal& y, const ChowForm& form, const std::vector<std::size_t>& indices,
                             std::span<const Rational> c, ChowBoundMode mode,
                             std::optional<Rational> delta = std::nullopt, const Budget& budget = {});

}  // namespace qst
