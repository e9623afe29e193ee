#pragma once

// A small exact Groebner engine over Q.
//
// Buchberger's algorithm with the Gebauer-Moeller criteria and the sugar
// selection strategy. Every computation runs under a Budget (S-pair count and
// maximal basis degree) and throws BudgetExceeded instead of running away.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qst/polyalg.hpp"

namespace qst {

class TermOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, Elimination };

  static TermOrder grevlex() { return TermOrder(Kind::GradedReverseLex, {}); }
  static TermOrder lex() { return TermOrder(Kind::Lex, {}); }
  /// Variables flagged in `block` are eliminated first (they are larger than all others).
  static TermOrder elimination(std::vector<bool> block) { return TermOrder(Kind::Elimination, std::move(block)); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool>& block() const noexcept { return block_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

 private:
  TermOrder(Kind kind, std::vector<bool> block) : kind_(kind), block_(std::move(block)) {}
  Kind kind_;
  std::vector<bool> block_;
};

struct Budget {
  std::size_t max_pairs = 200000;
  int max_degree = 64;
};

/// Generators over a common ring. An empty generator list is the zero ideal.
class Ideal {
 public:
  explicit Ideal(std::size_t num_vars) : num_vars_(num_vars) {}
  Ideal(std::size_t num_vars, std::vector<MultiPoly> gens);

  static Ideal unit(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<MultiPoly>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// Every generator homogeneous (true for the zero ideal).
  bool homogeneous() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<MultiPoly>& extra) const;

 private:
  std::size_t num_vars_;
  std::vector<MultiPoly> gens_;
};

/// A reduced, monic Groebner basis, sorted by leading monomial ascending.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t num_vars, TermOrder order, std::vector<MultiPoly> basis);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<MultiPoly>& basis() const noexcept { return basis_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  bool is_unit() const;
  /// Fully reduced normal form of f.
  MultiPoly reduce(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return reduce(f).is_zero(); }
  Ideal ideal() const { return Ideal(num_vars_, basis_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

 private:
  std::size_t num_vars_;
  TermOrder order_;
  std::vector<MultiPoly> basis_;
  std::vector<Monomial> leads_;
};

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const MultiPoly& f, const TermOrder& order);

GroebnerBasis groebner_basis(const Ideal& ideal, const TermOrder& order = TermOrder::grevlex(),
                             const Budget& budget = {});

/// Continue a basis computation with extra generators.
GroebnerBasis extend_basis(const GroebnerBasis& gb, const std::vector<MultiPoly>& extra, const Budget& budget = {});

/// Krull dimension of k[x]/LT from the leading monomials (largest independent variable set).
int krull_dimension(const std::vector<Monomial>& leads, std::size_t num_vars);

/// Numerator of the Hilbert series of k[x]/(leads), coefficients of t^0, t^1, ...
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& leads, std::size_t num_vars);

struct HilbertData {
  int krull_dim = 0;
  Integer degree = 0;
};
HilbertData hilbert_data(const std::vector<Monomial>& leads, std::size_t num_vars);

/// Dimension of the projective zero set; -1 when it is empty.
int projective_dimension(const Ideal& ideal, const Budget& budget = {});
int projective_dimension(const GroebnerBasis& gb);

/// Degree of the projective zero set; PreconditionError when it is empty.
Integer degree(const Ideal& ideal, const Budget& budget = {});
Integer degree(const GroebnerBasis& gb);

bool is_projectively_empty(const Ideal& ideal, const Budget& budget = {});

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = {});
/// I : (f)
Ideal quotient(const Ideal& ideal, const MultiPoly& f, const Budget& budget = {});
/// I : (x_i)^infinity
Ideal saturate_by_variable(const Ideal& ideal, std::size_t var, const Budget& budget = {});
/// I : (x_j : j in vars)^infinity, by iterated colon ideals to a fixpoint.
Ideal saturate(const Ideal& ideal, const std::vector<std::size_t>& vars, const Budget& budget = {});
/// Saturation by the irrelevant ideal (x_0, ..., x_N).
Ideal saturate_irrelevant(const Ideal& ideal, const Budget& budget = {});

/// Generators of I intersected with the subring omitting the `drop` variables (same ring indices).
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const Budget& budget = {});

/// Exact quotient h / f; throws DomainError when f does not divide h.
MultiPoly divide_exact(const MultiPoly& h, const MultiPoly& f);

}  // namespace qst
