#include "qst/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "qst/error.hpp"

namespace qst {

namespace {

GroebnerBasis basis_of(const Ideal& ideal, const Budget& budget) {
  return groebner_basis(ideal, TermOrder::grevlex(), budget);
}

std::vector<std::size_t> mask_to_subset(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

std::string subset_string(const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

DivisorFamily::DivisorFamily(Ideal ambient, FamilyMode mode, std::vector<std::vector<MultiPoly>> members,
                             const Budget& budget)
    : ambient_(std::move(ambient)), mode_(mode), members_(std::move(members)) {
  if (!ambient_.homogeneous()) throw DomainError("the ambient variety needs a homogeneous ideal");
  const GroebnerBasis gx = basis_of(ambient_, budget);
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const auto& member = members_[k];
    if (member.empty()) throw DomainError("family member " + std::to_string(k) + " has no equations");
    if (mode_ == FamilyMode::Divisor && member.size() != 1) {
      throw DomainError("divisor-mode member " + std::to_string(k) + " must be a single polynomial");
    }
    for (const MultiPoly& f : member) {
      if (f.num_vars() != ambient_.num_vars()) throw DomainError("family member lives in a different ring");
      if (!f.homogeneous_degree()) throw DomainError("family member " + std::to_string(k) + " is not homogeneous");
    }
    bool contains_x = std::all_of(member.begin(), member.end(), [&](const MultiPoly& f) { return gx.contains(f); });
    if (contains_x) throw DomainError("family member " + std::to_string(k) + " contains X");
  }
}

DivisorFamily DivisorFamily::divisors(Ideal ambient, const std::vector<MultiPoly>& members, const Budget& budget) {
  std::vector<std::vector<MultiPoly>> wrapped;
  for (const MultiPoly& f : members) wrapped.push_back({f});
  return DivisorFamily(std::move(ambient), FamilyMode::Divisor, std::move(wrapped), budget);
}

DistributiveResult distributive_constant(const DivisorFamily& family, const Budget& budget, std::size_t max_members) {
  const std::size_t q = family.size();
  if (q == 0) throw DomainError("distributive constant of an empty family");
  if (q > max_members || q > 24) {
    throw DomainError("family of " + std::to_string(q) + " members exceeds the subset cap of " +
                      std::to_string(max_members));
  }
  const std::uint32_t count = 1u << q;
  std::vector<std::optional<GroebnerBasis>> memo(count);
  memo[0] = basis_of(family.ambient(), budget);
  DistributiveResult result;
  result.dim_x = projective_dimension(*memo[0]);
  if (result.dim_x < 0) throw PreconditionError("X is empty");
  result.value = 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int top = 31 - std::countl_zero(mask);
    memo[mask] = extend_basis(*memo[mask ^ (1u << top)], family.members()[static_cast<std::size_t>(top)], budget);
    SubsetDimension row;
    row.subset = mask_to_subset(mask);
    row.dimension = projective_dimension(*memo[mask]);
    if (row.dimension < 0) {
      row.ratio = 0;
    } else {
      const int drop = result.dim_x - row.dimension;
      if (drop <= 0) {
        throw PreconditionError("subset " + subset_string(row.subset) + " does not cut X down; is X irreducible?");
      }
      row.ratio = Rational(static_cast<long>(row.subset.size()), drop);
      row.ratio.canonicalize();
    }
    if (row.ratio > result.value || (row.ratio == result.value && (result.witness.empty() || row.subset < result.witness))) {
      result.value = row.ratio;
      result.witness = row.subset;
    }
    result.table.push_back(std::move(row));
  }
  if (family.mode() == FamilyMode::Subscheme && result.value < 1) result.value = 1;
  return result;
}

SubgeneralReport subgeneral_position_check(const DivisorFamily& family, int m, const Budget& budget) {
  const std::size_t q = family.size();
  if (m < 0 || static_cast<std::size_t>(m) + 1 > q) {
    throw PreconditionError("subgeneral position needs at least m+1 members");
  }
  const std::size_t k = static_cast<std::size_t>(m) + 1;
  const GroebnerBasis gx = basis_of(family.ambient(), budget);
  SubgeneralReport report;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<MultiPoly> extra;
    for (std::size_t i : idx) {
      const auto& member = family.members()[i];
      extra.insert(extra.end(), member.begin(), member.end());
    }
    if (projective_dimension(extend_basis(gx, extra, budget)) >= 0) {
      report.holds = false;
      report.violations.push_back(idx);
    }
    // next combination in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == q - k + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return report;
}

Filtration dimension_filtration(const Ideal& x, const std::vector<MultiPoly>& divisors, const Budget& budget) {
  if (divisors.empty()) throw DomainError("filtration of an empty divisor list");
  if (!x.homogeneous()) throw DomainError("the ambient variety needs a homogeneous ideal");
  Filtration f;
  GroebnerBasis current = basis_of(x, budget);
  f.dim_x = projective_dimension(current);
  if (f.dim_x < 0) throw PreconditionError("X is empty");
  for (const MultiPoly& d : divisors) {
    if (d.num_vars() != x.num_vars() || !d.homogeneous_degree()) {
      throw DomainError("divisors must be homogeneous polynomials on the ambient space");
    }
    current = extend_basis(current, {d}, budget);
    f.prefix_dims.push_back(projective_dimension(current));
  }
  if (f.prefix_dims.back() >= 0) throw PreconditionError("the divisors have a common point on X");
  if (f.prefix_dims.front() == f.dim_x) throw PreconditionError("the first divisor contains X");
  const int n = f.dim_x;
  f.t.push_back(0);
  for (int u = 1; u <= n; ++u) {
    std::size_t s = 0;
    while (f.prefix_dims[s] >= n - u) ++s;
    f.t.push_back(s);
  }
  int previous = n;
  for (std::size_t s = 0; s < f.prefix_dims.size(); ++s) {
    if (f.prefix_dims[s] < previous - 1) {
      f.multi_drop = true;
      f.multi_drop_steps.push_back(s);
    }
    previous = f.prefix_dims[s];
  }
  return f;
}

GenericCombination generic_combinations(const Ideal& x, const std::vector<MultiPoly>& q, const Filtration& filt,
                                        std::uint64_t seed, const Budget& budget, int max_attempts) {
  if (q.empty()) throw DomainError("no hypersurfaces supplied");
  if (filt.multi_drop) throw PreconditionError("the filtration has a multi-step dimension drop");
  const auto deg = q.front().homogeneous_degree();
  for (const MultiPoly& f : q) {
    if (f.num_vars() != x.num_vars()) throw DomainError("hypersurface lives in a different ring");
    if (!f.homogeneous_degree() || f.homogeneous_degree() != deg) {
      throw PreconditionError("the hypersurfaces must be homogeneous of one common degree");
    }
  }
  const GroebnerBasis gx = basis_of(x, budget);
  const int n = projective_dimension(gx);
  if (filt.t.size() != static_cast<std::size_t>(n) + 1 || filt.t.front() != 0) {
    throw PreconditionError("the filtration does not match dim X");
  }
  for (std::size_t u = 1; u < filt.t.size(); ++u) {
    if (filt.t[u] <= filt.t[u - 1]) throw PreconditionError("filtration indices must increase strictly");
  }
  if (filt.t.back() >= q.size()) throw PreconditionError("filtration index beyond the hypersurface list");
  if (projective_dimension(extend_basis(gx, q, budget)) >= 0) {
    throw PreconditionError("the hypersurfaces have a common point on X");
  }

  std::mt19937_64 rng(seed);
  GenericCombination out;
  long bound = 1;
  std::string last;
  for (int attempt = 1; attempt <= max_attempts; ++attempt, bound *= 2) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    out.coefficients.assign(filt.t.size(), {});
    out.polys.clear();
    bool degenerate = false;
    for (std::size_t u = 0; u < filt.t.size(); ++u) {
      MultiPoly p(x.num_vars());
      for (std::size_t j = 0; j <= filt.t[u]; ++j) {
        const long c = dist(rng);
        out.coefficients[u].push_back(Integer(c));
        if (c != 0) p += q[j] * Rational(c);
      }
      degenerate = degenerate || p.is_zero();
      out.polys.push_back(std::move(p));
    }
    out.attempts = attempt;
    out.coefficient_bound = bound;
    if (!degenerate && projective_dimension(extend_basis(gx, out.polys, budget)) < 0) {
      out.verified_empty = true;
      return out;
    }
    std::ostringstream os;
    for (std::size_t u = 0; u < out.coefficients.size(); ++u) {
      os << (u ? "; " : "") << "P" << u << " coefficients";
      for (const Integer& c : out.coefficients[u]) os << " " << c.get_str();
    }
    last = os.str();
  }
  throw BudgetExceeded("no generic combination found in " + std::to_string(max_attempts) + " attempts; last: " + last);
}

Lemma32Result lemma32_eval(const std::vector<long>& t, const std::vector<Rational>& a) {
  if (t.size() < 2) throw PreconditionError("need at least t_0 and t_1");
  if (t.front() != 1) throw PreconditionError("t_0 must equal 1");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] <= t[i - 1]) throw PreconditionError("t must increase strictly");
  }
  const std::size_t n = t.size() - 1;
  if (a.size() != n) throw PreconditionError("need exactly one a_s per gap of t");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 1) throw PreconditionError("every a_s must be at least 1");
    if (i > 0 && a[i] > a[i - 1]) throw PreconditionError("a must be nonincreasing");
  }
  Lemma32Result r;
  r.delta = 0;
  for (std::size_t s = 1; s <= n; ++s) {
    Rational ratio(t[s] - t[0], static_cast<long>(s));
    ratio.canonicalize();
    r.delta = std::max(r.delta, ratio);
  }
  r.lhs = 1;
  Rational product = 1;
  for (std::size_t s = 0; s < n; ++s) {
    r.lhs *= pow(a[s], t[s + 1] - t[s]);
    product *= a[s];
  }
  const long p = r.delta.get_num().get_si();
  const long q = r.delta.get_den().get_si();
  const Rational left = pow(r.lhs, q);
  const Rational right = pow(product, p);
  r.holds = left <= right;
  r.equality = left == right;
  r.rhs = std::exp(to_double(r.delta) * log_of(product));
  return r;
}

}  // namespace qst
