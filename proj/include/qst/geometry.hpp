#pragma once

// Families of divisors and subschemes on a projective variety X:
// distributive constants, subgeneral position, dimension filtrations,
// generic linear combinations and the product inequality for filtrations.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qst/groebner.hpp"

namespace qst {

enum class FamilyMode { Divisor, Subscheme };

/// Members of a family on X. In Divisor mode every member is a single hypersurface
/// equation; in Subscheme mode a member is the generator list of a closed subscheme.
class DivisorFamily {
 public:
  /// Throws DomainError when a member contains X (all of its generators lie in I(X)).
  DivisorFamily(Ideal ambient, FamilyMode mode, std::vector<std::vector<MultiPoly>> members,
                const Budget& budget = {});
  static DivisorFamily divisors(Ideal ambient, const std::vector<MultiPoly>& members, const Budget& budget = {});

  const Ideal& ambient() const noexcept { return ambient_; }
  FamilyMode mode() const noexcept { return mode_; }
  const std::vector<std::vector<MultiPoly>>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  Ideal ambient_;
  FamilyMode mode_;
  std::vector<std::vector<MultiPoly>> members_;
};

struct SubsetDimension {
  std::vector<std::size_t> subset;
  int dimension = -1;  // projective dimension of X meeting the subset; -1 when empty
  Rational ratio;      // #J / (dim X - dimension), 0 for an empty intersection
};

struct DistributiveResult {
  Rational value;
  std::vector<std::size_t> witness;
  int dim_x = 0;
  std::vector<SubsetDimension> table;  // every nonempty subset, in bitmask order
};

/// Maximum of #J / (dim X - dim(X meet J)) over nonempty J. Subscheme mode clamps below at 1.
DistributiveResult distributive_constant(const DivisorFamily& family, const Budget& budget = {},
                                         std::size_t max_members = 12);

struct SubgeneralReport {
  bool holds = true;
  std::vector<std::vector<std::size_t>> violations;
};

/// Every (m+1)-subset of the family meets X in the empty set.
SubgeneralReport subgeneral_position_check(const DivisorFamily& family, int m, const Budget& budget = {});

struct Filtration {
  /// t_0 = 0 < t_1 < ... < t_n; t_u is the first prefix whose dimension is below n - u.
  std::vector<std::size_t> t;
  /// Projective dimension of X meeting Q_0..Q_s for every prefix s (-1 for empty).
  std::vector<int> prefix_dims;
  int dim_x = 0;
  /// Set when some step lowers the dimension by two or more.
  bool multi_drop = false;
  std::vector<std::size_t> multi_drop_steps;
};

Filtration dimension_filtration(const Ideal& x, const std::vector<MultiPoly>& divisors, const Budget& budget = {});

struct GenericCombination {
  std::vector<std::vector<Integer>> coefficients;  // row u has t_u + 1 entries
  std::vector<MultiPoly> polys;
  int attempts = 0;
  Integer coefficient_bound;
  bool verified_empty = false;
};

/// Seeded search for P_u = sum_{j <= t_u} c_uj Q_j with X meeting all P_u empty.
/// The coefficient range starts at {-1, 0, 1} and doubles after each failed attempt.
GenericCombination generic_combinations(const Ideal& x, const std::vector<MultiPoly>& q, const Filtration& filt,
                                        std::uint64_t seed, const Budget& budget = {}, int max_attempts = 16);

struct Lemma32Result {
  Rational delta;
  Rational lhs;
  double rhs = 0.0;
  bool holds = false;
  bool equality = false;
};

/// Compares a_0^{t_1-t_0} ... a_{n-1}^{t_n-t_{n-1}} with (a_0 ... a_{n-1})^delta exactly.
Lemma32Result lemma32_eval(const std::vector<long>& t, const std::vector<Rational>& a);

}  // namespace qst
