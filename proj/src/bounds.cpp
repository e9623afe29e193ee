#include "qst/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qst/error.hpp"

namespace qst {

namespace mp = boost::multiprecision;

HighPrecision to_high(const Rational& x) {
  return HighPrecision(x.get_num().get_str()) / HighPrecision(x.get_den().get_str());
}

std::string to_string(const HighPrecision& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

void ProblemParams::validate() const {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (m < n) throw PreconditionError("m must be at least n");
  if (big_n < n) throw PreconditionError("N must be at least n");
  if (sgn(delta) <= 0 || delta >= 1) throw PreconditionError("delta must lie in (0, 1)");
  if (delta_x < 1) throw PreconditionError("delta_X must be at least 1");
  if (d < 1 || delta_deg < 1 || c < 1 || s < 1) throw PreconditionError("d, Delta, C and s must be positive");
  if (h < 0) throw PreconditionError("H must be nonnegative");
}

double height_aggregate(long big_n, long m, double h_x, double max_h_system) {
  return std::log(static_cast<double>(big_n + m)) + h_x + max_h_system;
}

Rational alpha(const ProblemParams& p) {
  p.validate();
  Rational a = Rational(p.m + 1) * p.delta_x / (Rational(p.n) + p.delta_x);
  a.canonicalize();
  return a;
}

namespace {

Rational ipow(long base, long exponent) { return pow(Rational(base), exponent); }

// alpha(n+1) + 1
Rational alpha_prime(const ProblemParams& p) { return alpha(p) * Rational(p.n + 1) + 1; }

// log(log(4x) loglog(4x)), defined for x >= 1
HighPrecision log_double_log(const Integer& x) {
  const HighPrecision l = mp::log(HighPrecision(4) * HighPrecision(x.get_str()));
  return mp::log(l * mp::log(l));
}

Rational a1_exponent(const ProblemParams& p) {
  const Rational ap = alpha_prime(p);
  return ipow(2, 12 * p.n + 4) * pow(ap, 4 * p.n) * pow(p.delta, -2 * p.n) * ipow(p.d, 2 * p.n + 2) *
         ipow(p.delta_deg, p.n * (2 * p.n + 2));
}

HighPrecision log_t_base(const ProblemParams& p) {
  // log(2 e (alpha(n+1)+1) / delta)
  return mp::log(HighPrecision(2) * to_high(alpha_prime(p)) / to_high(p.delta)) + HighPrecision(1);
}

}  // namespace

BoundSet theorem_constants(const ProblemParams& p) {
  p.validate();
  BoundSet b;
  b.alpha = alpha(p);
  const Rational ap = alpha_prime(p);
  const long k = (p.m + 1) * p.s - 1;
  b.a2 = Rational(8 * p.n + 6) * ap * ap * Rational(p.d) * ipow(p.delta_deg, p.n + 1) / p.delta;
  b.a2.canonicalize();
  b.log_a1 = to_high(a1_exponent(p)) + mp::log(HighPrecision(4 * (p.m + 1) * p.s)) +
             HighPrecision(k) * log_t_base(p) + log_double_log(Integer(p.c));
  const Rational a3_exp = ipow(2, 6 * p.n + 8) * Rational(p.m) * pow(ap, 2 * p.n + 2) * pow(p.delta, -p.n - 1) *
                          ipow(p.d, p.n + 2) * ipow(p.delta_deg, p.n * (p.n + 2));
  b.log_a3 = to_high(a3_exp) * mp::log(HighPrecision(2 * p.c * p.s));
  b.h = p.h;
  return b;
}

EfConstants ef_constants(long n, const Integer& big_d, const Integer& r, const Rational& delta) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (big_d < 1) throw PreconditionError("D must be at least 1");
  if (r < 1) throw PreconditionError("R must be at least 1");
  if (sgn(delta) <= 0 || delta > 1) throw PreconditionError("delta must lie in (0, 1]");
  const Rational dd(big_d);
  EfConstants e;
  e.b2 = Rational(4 * n + 3) * dd / delta;
  e.b2.canonicalize();
  e.log_b1 = to_high(ipow(2, 10 * n + 4) * pow(delta, -2 * n) * pow(dd, 2 * n + 2)) + log_double_log(r);
  e.log_b3 = to_high(ipow(2, 5 * n + 4) * pow(delta, -n - 1) * pow(dd, n + 2)) *
             mp::log(HighPrecision(4) * HighPrecision(r.get_str()));
  return e;
}

ProofIdentityReport check_proof_identities(const ProblemParams& p) {
  p.validate();
  ProofIdentityReport r;
  r.a = theorem_constants(p);
  const Rational ap = alpha_prime(p);
  r.delta_prime = p.delta / (Rational(2) * ap * ap);
  r.delta_prime.canonicalize();
  r.r_prime = Integer(p.c) * (p.m + 1) * p.s - 1;
  r.d_prime = Integer(p.d);
  for (long i = 0; i < p.n; ++i) r.d_prime *= p.delta_deg;
  r.b_prime = ef_constants(p.n, r.d_prime, r.r_prime, r.delta_prime);

  r.b2_times_delta = r.b_prime.b2 * Rational(p.delta_deg);
  r.a2_identity = r.b2_times_delta == r.a.a2;

  const long k = (p.m + 1) * p.s - 1;
  const HighPrecision exponent = HighPrecision(k) * log_t_base(p);
  if (k == 0) {
    r.log_t = 0;
  } else if (exponent < 150) {
    r.log_t = mp::log(mp::floor(mp::exp(exponent)));
  } else {
    // The integer part differs from the power by a relative error below e^-150.
    r.log_t = exponent;
  }

  r.a1_exponent = a1_exponent(p);
  r.b1_exponent = ipow(2, 10 * p.n + 4) * pow(r.delta_prime, -2 * p.n) * pow(Rational(r.d_prime), 2 * p.n + 2);
  const HighPrecision tail_b = log_double_log(r.r_prime) + r.log_t;
  const HighPrecision tail_a =
      mp::log(HighPrecision(4 * (p.m + 1) * p.s)) + exponent + log_double_log(Integer(p.c));
  r.a1_bound = to_high(r.b1_exponent - r.a1_exponent) + tail_b - tail_a <= 0;

  const Integer extra = Integer(26 * p.n * p.m * p.c * p.s) * r.d_prime * p.delta_deg * p.delta_deg;
  r.a3_slack = r.a.log_a3 - r.b_prime.log_b3 - mp::log(HighPrecision(extra.get_str()));
  r.a3_bound = r.a3_slack >= 0;

  if (!r.a2_identity) {
    throw InternalAssertion("B'_2 Delta = " + to_string(r.b2_times_delta) + " differs from A_2 = " + to_string(r.a.a2));
  }
  if (!r.a1_bound) throw InternalAssertion("log B'_1 + log T exceeds log A_1");
  return r;
}

// ---------------------------------------------------------------- covering

namespace {

void compositions(long remaining, std::size_t slots, std::vector<long>& prefix, std::vector<std::vector<long>>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long k = 0; k <= remaining; ++k) {
    prefix.push_back(k);
    compositions(remaining - k, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

CoveringSet::CoveringSet(std::size_t q, const Rational& theta) : q_(q), theta_(theta) {
  if (q < 2) throw DomainError("covering sets need q >= 2");
  if (sgn(theta) <= 0 || theta > Rational(1, 2)) throw DomainError("theta must lie in (0, 1/2]");
  const Rational raw = Rational(2 * static_cast<long>(q)) * (1 - theta) / theta;
  Integer ceil_val;
  mpz_cdiv_q(ceil_val.get_mpz_t(), raw.get_num_mpz_t(), raw.get_den_mpz_t());
  if (!ceil_val.fits_slong_p()) throw DomainError("covering grid too fine");
  grid_ = ceil_val.get_si();
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(grid_) + q - 1, q - 1);
  if (count > 5000000) throw DomainError("covering set of " + count.get_str() + " tuples is too large");
  std::vector<long> prefix;
  compositions(grid_, q, prefix, numerators_);
}

std::vector<Rational> CoveringSet::tuple(std::size_t i) const {
  std::vector<Rational> out;
  for (long k : numerators_[i]) {
    Rational c(k, grid_);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

std::size_t CoveringSet::find(const std::vector<long>& k) const {
  auto it = std::lower_bound(numerators_.begin(), numerators_.end(), k);
  if (it == numerators_.end() || *it != k) return numerators_.size();
  return static_cast<std::size_t>(it - numerators_.begin());
}

double CoveringSet::cardinality_bound() const {
  return std::pow(std::exp(1.0) / to_double(theta_), static_cast<double>(q_ - 1));
}

CoveringSet covering_set(std::size_t q, const Rational& theta) { return CoveringSet(q, theta); }

CoveringWitness covering_check(const CoveringSet& w, const std::vector<Rational>& a, const Rational& lambda) {
  if (a.size() != w.q()) throw DomainError("A has the wrong length");
  if (sgn(lambda) <= 0) throw PreconditionError("Lambda must be positive");
  Rational total = 0;
  for (const Rational& x : a) {
    if (sgn(x) > 0) throw PreconditionError("every A_j must be nonpositive");
    total += x;
  }
  if (total > -lambda) throw PreconditionError("sum of A_j must be at most -Lambda");

  const long big_m = w.grid();
  const Rational scale = (1 - w.theta()) * lambda;
  std::vector<long> k(w.q());
  long sum = 0;
  for (std::size_t j = 0; j < w.q(); ++j) {
    // floor(M * beta_j) with beta_j = -A_j / ((1 - theta) Lambda)
    const Rational v = Rational(big_m) * (-a[j]) / scale;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    k[j] = f > big_m ? big_m : f.get_si();
    sum += k[j];
  }
  while (sum > big_m) {
    // one unit at a time from the current first maximum keeps the tuple balanced
    --*std::max_element(k.begin(), k.end());
    --sum;
  }
  CoveringWitness out;
  out.index = w.find(k);
  if (sum != big_m || out.index == w.size()) throw InternalAssertion("covering witness construction failed");
  out.tuple = w.tuple(out.index);
  for (std::size_t j = 0; j < w.q(); ++j) {
    if (a[j] > -out.tuple[j] * scale) throw InternalAssertion("covering witness violates coordinate " + std::to_string(j));
  }
  return out;
}

}  // namespace qst
