#pragma once

// Small helpers shared by the unit tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qst/groebner.hpp"
#include "qst/polyalg.hpp"

namespace testing {

inline qst::MultiPoly P(const std::string& text, std::size_t vars) { return qst::parse_poly(text, vars); }

inline std::vector<qst::MultiPoly> Ps(std::initializer_list<const char*> texts, std::size_t vars) {
  std::vector<qst::MultiPoly> out;
  for (const char* t : texts) out.push_back(qst::parse_poly(t, vars));
  return out;
}

inline qst::Ideal I(std::initializer_list<const char*> texts, std::size_t vars) { return qst::Ideal(vars, Ps(texts, vars)); }

inline qst::Rational Q(long num, long den = 1) {
  qst::Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Random nonzero rational with numerator and denominator bounded by `bound`.
inline qst::Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return Q(n, den(rng));
}

/// Random homogeneous polynomial of the given degree with small integer coefficients.
inline qst::MultiPoly random_homogeneous(std::mt19937_64& rng, std::size_t vars, int degree, long coeff_bound,
                                         int terms) {
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  qst::MultiPoly f(vars);
  while (f.is_zero()) {
    for (int k = 0; k < terms; ++k) {
      std::vector<int> e(vars, 0);
      for (int d = 0; d < degree; ++d) ++e[var(rng)];
      f.add_term(qst::Monomial(e), qst::Rational(coeff(rng)));
    }
  }
  return f;
}

}  // namespace testing
