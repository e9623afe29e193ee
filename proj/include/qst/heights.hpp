#pragma once

// Heights of rational projective points and local Weil functions on P^N.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qst/error.hpp"
#include "qst/exact_log.hpp"
#include "qst/polyalg.hpp"
#include "qst/qarith.hpp"

namespace qst {

/// The point lies on a divisor being evaluated (infinite proximity).
class PointOnDivisor : public DomainError {
 public:
  explicit PointOnDivisor(const std::string& what) : DomainError(what) {}
};

/// A point of P^N(Q), stored as coprime integers with the first nonzero entry positive.
class ProjPoint {
 public:
  explicit ProjPoint(std::span<const Rational> coords);
  explicit ProjPoint(std::span<const Integer> coords);
  /// "a0,a1,...,aN" with rational entries.
  static ProjPoint parse(std::string_view text);

  /// N, the dimension of the ambient projective space.
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  std::vector<Rational> rational_coords() const;

  /// "(x0:x1:...:xN)"
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Integer> coords_;
};

/// max_i |x_i|_v for the canonical representative.
Rational point_norm(const ProjPoint& p, const Place& v);

/// Multiplicative height: max |x_i| of the coprime integer representative.
ExactLog proj_height(const ProjPoint& p);

/// Places where some canonical coordinate has |x_i|_v != 1, plus infinity.
PlaceSet point_support(const ProjPoint& p);

/// lambda_{div f, v}(P) = log(|P|_v^{deg f} |f|_v / |f(P)|_v). Throws PointOnDivisor if f(P) = 0.
ExactLog weil_divisor(const MultiPoly& f, const Place& v, const ProjPoint& p);

struct SubschemeWeil {
  ExactLog value;
  std::size_t argmin = 0;
  /// Indices of defining polynomials vanishing at P (skipped in the minimum).
  std::vector<std::size_t> vanishing;
};

/// Minimum of the divisor Weil functions over the defining polynomials that do not vanish at P.
SubschemeWeil weil_subscheme(std::span<const MultiPoly> fs, const Place& v, const ProjPoint& p);

/// The left side of the approximation inequality,
///   sum_{v in S} sum_i (1/deg f_i) log(|f_i(P)|_v / |P|_v^{deg f_i}),
/// kept exact as log(powered) / exponent_lcm.
struct ApproxSum {
  Rational powered;
  long exponent_lcm = 1;
  double log_value = 0.0;
};

ApproxSum approx_sum(const PolySystem& system, const PlaceSet& places, const ProjPoint& p);

/// Nonnegative weights c_{iv} for finitely many places; all other places carry zero weights.
class WeightAssignment {
 public:
  explicit WeightAssignment(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Throws DomainError on a negative entry or a length other than N+1.
  void set(const Place& v, std::vector<Rational> weights);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::map<Place, std::vector<Rational>>& per_place() const noexcept { return per_place_; }
  /// sum_v max_i c_{iv}
  Rational max_sum() const;
  /// The sum condition sum_v max_i c_{iv} <= 1.
  bool satisfies_sum_bound() const { return max_sum() <= 1; }

 private:
  std::size_t ambient_dim_;
  std::map<Place, std::vector<Rational>> per_place_;
};

/// log H_{Q,c}(y) = sum_v log max_i |y_i|_v Q^{c_{iv}}. Throws DomainError when q_base <= 1.
double twisted_height(const ProjPoint& y, const WeightAssignment& c, double q_base);

}  // namespace qst
