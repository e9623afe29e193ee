#pragma once

// Explicit constants of the quantitative subspace theorem and the
// covering set of weight tuples used to split the approximation sum.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qst/qarith.hpp"

namespace qst {

/// Working precision for constants whose linear values overflow any machine format.
using HighPrecision = boost::multiprecision::cpp_bin_float_100;

HighPrecision to_high(const Rational& x);
std::string to_string(const HighPrecision& x, int digits = 17);

struct ProblemParams {
  long n = 1;
  long m = 1;
  long big_n = 1;       // ambient dimension N
  long d = 1;           // degree of X
  long delta_deg = 1;   // lcm of the system degrees
  Rational delta_x = 1; // distributive bound
  Rational delta = Rational(1, 2);
  long c = 1;           // coefficient field degree (1 over Q)
  long s = 1;           // number of places
  double h = 0.0;       // the height aggregate H

  /// Throws PreconditionError on m < n, n < 1, delta outside (0, 1), delta_x < 1, or d, Delta, C, s < 1.
  void validate() const;
};

/// H = log(N + m) + h(X) + max_i h(1, f_i).
double height_aggregate(long big_n, long m, double h_x, double max_h_system);

struct BoundSet {
  Rational alpha;
  Rational a2;
  HighPrecision log_a1;
  HighPrecision log_a3;
  double h = 0.0;
};

/// (m+1) delta_X / (n + delta_X)
Rational alpha(const ProblemParams& p);

BoundSet theorem_constants(const ProblemParams& p);

struct EfConstants {
  HighPrecision log_b1;
  Rational b2;
  HighPrecision log_b3;
};

/// Constants of the twisted-height theorem for a variety of dimension n and degree D in P^R.
/// Throws PreconditionError when R < 1, D < 1, n < 1 or delta outside (0, 1].
EfConstants ef_constants(long n, const Integer& big_d, const Integer& r, const Rational& delta);

struct ProofIdentityReport {
  Rational delta_prime;     // delta / (2 (alpha(n+1) + 1)^2)
  Integer r_prime;          // C (m+1) s - 1
  Integer d_prime;          // d Delta^n
  EfConstants b_prime;
  BoundSet a;
  Rational b2_times_delta;  // B'_2 Delta
  bool a2_identity = false; // B'_2 Delta == A_2
  HighPrecision log_t;      // log of the integer part of (2e(alpha(n+1)+1)/delta)^{(m+1)s-1}
  bool t_is_floor = true;   // the bracket is read as the integer part
  /// The two sides agree in their leading exponential parts; these are those parts.
  Rational a1_exponent;
  Rational b1_exponent;
  bool a1_bound = false;    // log B'_1 + log T <= log A_1
  HighPrecision a3_slack;   // log A_3 - log B'_3 - log(26 n m d Delta^{n+2} C s)
  bool a3_bound = false;
};

/// Computes the substituted constants; throws InternalAssertion when B'_2 Delta != A_2
/// or log B'_1 + log T > log A_1.
ProofIdentityReport check_proof_identities(const ProblemParams& p);

/// Grid tuples (k_1/M, ..., k_q/M) with sum k_j = M, M = ceil(2q(1-theta)/theta).
class CoveringSet {
 public:
  CoveringSet(std::size_t q, const Rational& theta);

  std::size_t q() const noexcept { return q_; }
  const Rational& theta() const noexcept { return theta_; }
  long grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return numerators_.size(); }
  /// Numerators k_j of tuple i, sorted lexicographically across the set.
  const std::vector<long>& numerators(std::size_t i) const { return numerators_[i]; }
  std::vector<Rational> tuple(std::size_t i) const;
  /// Index of a numerator vector, or size() when absent.
  std::size_t find(const std::vector<long>& k) const;

  /// (e/theta)^{q-1}
  double cardinality_bound() const;
  bool exceeds_bound() const { return static_cast<double>(size()) > cardinality_bound(); }

 private:
  std::size_t q_;
  Rational theta_;
  long grid_;
  std::vector<std::vector<long>> numerators_;
};

/// Throws DomainError unless q >= 2 and 0 < theta <= 1/2.
CoveringSet covering_set(std::size_t q, const Rational& theta);

struct CoveringWitness {
  std::size_t index = 0;
  std::vector<Rational> tuple;
};

/// A tuple with A_j <= -c_j (1 - theta) Lambda for every j. Requires A_j <= 0, Lambda > 0
/// and sum A_j <= -Lambda (PreconditionError otherwise); InternalAssertion if none is found.
CoveringWitness covering_check(const CoveringSet& w, const std::vector<Rational>& a, const Rational& lambda);

}  // namespace qst
