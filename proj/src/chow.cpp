#include "qst/chow.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qst/error.hpp"
#include "qst/geometry.hpp"

namespace qst {

std::vector<std::string> chow_var_names(std::size_t n, std::size_t ambient) {
  const bool wide = n >= 10 || ambient >= 10;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= ambient; ++j) {
      names.push_back("u" + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
    }
  }
  return names;
}

ChowForm::ChowForm(MultiPoly poly, std::size_t n, std::size_t ambient)
    : poly_(std::move(poly)), n_(n), big_n_(ambient) {
  const std::size_t width = ambient + 1;
  if (poly_.num_vars() != (n + 1) * width) throw DomainError("Chow form has the wrong number of variables");
  if (poly_.is_zero()) throw DomainError("Chow form is zero");
  std::optional<int> common;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<bool> block(poly_.num_vars(), false);
    for (std::size_t j = 0; j < width; ++j) block[i * width + j] = true;
    auto d = poly_.homogeneous_degree_in(block);
    if (!d) throw DomainError("Chow form is not homogeneous in block " + std::to_string(i));
    if (common && *common != *d) throw DomainError("Chow form blocks have different degrees");
    common = d;
  }
  block_degree_ = *common;
  if (block_degree_ < 1) throw DomainError("Chow form has block degree zero");
}

std::vector<std::string> ChowForm::var_names() const { return chow_var_names(n_, big_n_); }

ChowForm chow_form(const Ideal& x, int n, const Budget& budget) {
  if (!x.homogeneous()) throw DomainError("Chow form needs a homogeneous ideal");
  if (n < 0) throw PreconditionError("Chow form of an empty variety");
  const GroebnerBasis gx = groebner_basis(x, TermOrder::grevlex(), budget);
  const int dim = projective_dimension(gx);
  if (dim != n) {
    throw PreconditionError("stated dimension " + std::to_string(n) + " differs from the computed " +
                            std::to_string(dim));
  }
  const std::size_t width = x.num_vars();
  const std::size_t nb = static_cast<std::size_t>(n) + 1;
  const std::size_t u0 = width;
  const std::size_t total = width + nb * width + 1;
  const std::size_t s = total - 1;

  // A coordinate x_k that does not vanish on X; saturating by it removes the
  // spurious component x = 0 of the incidence variety.
  std::size_t k = 0;
  while (k < width && gx.contains(MultiPoly::variable(width, k))) ++k;
  if (k == width) throw PreconditionError("X lies in every coordinate hyperplane");

  std::vector<MultiPoly> gens;
  for (const MultiPoly& f : x.gens()) gens.push_back(f.extend(total));
  for (std::size_t i = 0; i < nb; ++i) {
    MultiPoly l(total);
    for (std::size_t j = 0; j < width; ++j) {
      l += MultiPoly::variable(total, u0 + i * width + j) * MultiPoly::variable(total, j);
    }
    gens.push_back(std::move(l));
  }
  gens.push_back(MultiPoly::constant(total, 1) - MultiPoly::variable(total, s) * MultiPoly::variable(total, k));

  std::vector<std::size_t> drop(width);
  std::iota(drop.begin(), drop.end(), 0);
  drop.push_back(s);
  const Ideal elim = eliminate(Ideal(total, std::move(gens)), drop, budget);
  if (elim.gens().size() != 1) {
    throw PreconditionError("elimination ideal has " + std::to_string(elim.gens().size()) +
                            " generators; X is not irreducible of the stated dimension");
  }
  std::vector<std::size_t> map(total, 0);
  for (std::size_t v = 0; v < nb * width; ++v) map[u0 + v] = v;
  MultiPoly f = elim.gens().front().rename(nb * width, map);
  f = f * (Rational(1) / f.coefficient(leading_monomial(f, TermOrder::grevlex())));

  ChowForm form(std::move(f), static_cast<std::size_t>(n), width - 1);
  const Integer deg = degree(gx);
  if (Integer(form.block_degree()) != deg) {
    // The elimination sees only the reduced variety, so a mismatch means I(X) is not radical.
    throw PreconditionError("Chow form block degree " + std::to_string(form.block_degree()) +
                            " differs from deg X = " + deg.get_str() + "; is the ideal of X reduced?");
  }
  return form;
}

Rational chow_weight(const ChowForm& form, std::span<const Rational> c) {
  const std::size_t width = form.ambient() + 1;
  if (c.size() != width) throw DomainError("weight vector has the wrong length");
  std::optional<Rational> best;
  for (const auto& [m, coeff] : form.poly().terms()) {
    Rational w = 0;
    for (std::size_t v = 0; v < m.num_vars(); ++v) {
      if (m[v]) w += c[v % width] * m[v];
    }
    if (!best || w > *best) best = w;
  }
  return *best;
}

Rational chow_weight_aggregate(const ChowForm& form, const WeightAssignment& c) {
  if (c.ambient_dim() != form.ambient()) throw DomainError("weights and Chow form live in different spaces");
  if (!c.satisfies_sum_bound()) {
    throw PreconditionError("weight assignment has sum over places of max weights " + to_string(c.max_sum()) +
                            " > 1");
  }
  Rational total = 0;
  for (const auto& [v, weights] : c.per_place()) total += chow_weight(form, weights);
  return total / Rational(static_cast<long>((form.dim() + 1) * static_cast<std::size_t>(form.block_degree())));
}

ImageVariety image_variety(const Ideal& x, const std::vector<MultiPoly>& g, const Budget& budget) {
  if (g.size() < 2) throw DomainError("the map needs at least two coordinate functions");
  if (!x.homogeneous()) throw DomainError("image variety needs a homogeneous ideal for X");
  const std::size_t nx = x.num_vars();
  const std::size_t ny = g.size();
  auto deg = g.front().homogeneous_degree();
  for (const MultiPoly& f : g) {
    if (f.num_vars() != nx) throw DomainError("map component lives in a different ring");
    if (!f.homogeneous_degree() || f.homogeneous_degree() != deg || *deg < 1) {
      throw DomainError("map components must be homogeneous of one common positive degree");
    }
  }
  const GroebnerBasis gx = groebner_basis(x, TermOrder::grevlex(), budget);
  ImageVariety out{Ideal(ny), projective_dimension(gx), 0, 0, 0, *deg};
  if (out.dim_x < 0) throw PreconditionError("X is empty");
  if (projective_dimension(extend_basis(gx, g, budget)) >= 0) {
    throw DomainError("the map components have a common zero on X");
  }
  out.degree_x = degree(gx);

  const std::size_t total = nx + ny;
  std::vector<MultiPoly> gens;
  for (const MultiPoly& f : x.gens()) gens.push_back(f.extend(total));
  for (std::size_t i = 0; i < ny; ++i) gens.push_back(MultiPoly::variable(total, nx + i) - g[i].extend(total));
  std::vector<std::size_t> drop(nx);
  std::iota(drop.begin(), drop.end(), 0);
  const Ideal elim = eliminate(Ideal(total, std::move(gens)), drop, budget);
  std::vector<std::size_t> map(total, 0);
  for (std::size_t i = 0; i < ny; ++i) map[nx + i] = i;
  std::vector<MultiPoly> ys;
  for (const MultiPoly& f : elim.gens()) ys.push_back(f.rename(ny, map));
  out.ideal = Ideal(ny, std::move(ys));

  const GroebnerBasis gy = groebner_basis(out.ideal, TermOrder::grevlex(), budget);
  out.dim_y = projective_dimension(gy);
  out.degree_y = degree(gy);
  if (out.dim_y != out.dim_x) {
    throw InternalAssertion("image has dimension " + std::to_string(out.dim_y) + " but X has dimension " +
                            std::to_string(out.dim_x));
  }
  Integer bound = out.degree_x;
  for (int i = 0; i < out.dim_x; ++i) bound *= *deg;
  if (out.degree_y > bound) {
    throw InternalAssertion("image degree " + out.degree_y.get_str() + " exceeds deg X * deg(g)^n = " +
                            bound.get_str());
  }
  return out;
}

ChowBoundReport thm22_report(const Ideal& y, const ChowForm& form, const std::vector<std::size_t>& indices,
                             std::span<const Rational> c, ChowBoundMode mode, std::optional<Rational> delta,
                             const Budget& budget) {
  const std::size_t width = y.num_vars();
  if (form.ambient() + 1 != width) throw DomainError("Chow form and Y live in different spaces");
  if (c.size() != width) throw DomainError("weight vector has the wrong length");
  for (const Rational& w : c) {
    if (sgn(w) < 0) throw PreconditionError("weights must be nonnegative");
  }
  if (indices.empty()) throw DomainError("no hyperplanes selected");
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("repeated hyperplane index");
  if (sorted.back() >= width) throw DomainError("hyperplane index out of range");

  ChowBoundReport r;
  r.mode = mode;
  r.indices = indices;
  r.n = form.dim();
  r.m = indices.size() - 1;
  const GroebnerBasis gy = groebner_basis(y, TermOrder::grevlex(), budget);
  r.degree = degree(gy);

  std::vector<MultiPoly> hyperplanes;
  for (std::size_t i : indices) hyperplanes.push_back(MultiPoly::variable(width, i));

  r.hypotheses.push_back({"dim Y >= 1", r.n >= 1});
  r.hypotheses.push_back({"m >= n", r.m >= r.n});
  for (std::size_t i : indices) {
    r.hypotheses.push_back({"Y not contained in H_" + std::to_string(i), !gy.contains(MultiPoly::variable(width, i))});
  }
  if (mode == ChowBoundMode::Filtered) {
    const Rational& last = c[indices.back()];
    bool minimal = std::all_of(indices.begin(), indices.end(), [&](std::size_t i) { return c[i] >= last; });
    r.hypotheses.push_back({"c_{i_m} is the minimum of the selected weights", minimal});
    std::vector<MultiPoly> first(hyperplanes.begin(), hyperplanes.end() - 1);
    r.hypotheses.push_back({"Y meets the first m hyperplanes", projective_dimension(extend_basis(gy, first, budget)) >= 0});
  } else {
    r.hypotheses.push_back(
        {"Y misses the intersection of all selected hyperplanes", projective_dimension(extend_basis(gy, hyperplanes, budget)) < 0});
    if (delta) r.hypotheses.push_back({"delta > 0", sgn(*delta) > 0});
  }
  auto failed = [&r] {
    std::ostringstream os;
    bool any = false;
    for (const Hypothesis& h : r.hypotheses) {
      if (!h.holds) {
        os << (any ? "; " : "") << "hypothesis failed: " << h.name;
        any = true;
      }
    }
    return any ? std::optional<std::string>(os.str()) : std::nullopt;
  };
  if (auto msg = failed()) throw PreconditionError(*msg);

  r.delta_y = distributive_constant(DivisorFamily::divisors(y, hyperplanes, budget), budget).value;
  r.weight_sum = 0;
  for (std::size_t i : indices) r.weight_sum += c[i];
  const Rational deg_y(r.degree);
  if (mode == ChowBoundMode::Filtered) {
    r.delta_used = r.delta_y;
    r.rhs = deg_y / r.delta_used * r.weight_sum;
  } else {
    if (delta) {
      r.hypotheses.push_back({"distributive constant of the family is at most delta", r.delta_y <= *delta});
      if (auto msg = failed()) throw PreconditionError(*msg);
    }
    r.delta_used = delta ? *delta : r.delta_y;
    const Rational n(static_cast<long>(r.n));
    const Rational m1(static_cast<long>(r.m + 1));
    r.rhs = deg_y * (n + r.delta_used) / (m1 * r.delta_used) * r.weight_sum;
  }
  r.lhs = chow_weight(form, c);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  if (!r.holds) {
    throw InternalAssertion("Chow weight bound violated: e_Y(c) = " + to_string(r.lhs) + " < " + to_string(r.rhs));
  }
  return r;
}

}  // namespace qst
