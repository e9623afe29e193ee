#include "qst/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "qst/error.hpp"

namespace qst {

// -------------------------------------------------------------- TermOrder

namespace {

int compare_grevlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want) {
  const std::size_t n = a.num_vars();
  int da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = n; k-- > 0;) {
    if (mask && (*mask)[k] != want) continue;
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GradedReverseLex:
      return compare_grevlex(a, b, nullptr, true);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case Kind::Elimination: {
      if (int c = compare_grevlex(a, b, &block_, true)) return c;
      return compare_grevlex(a, b, &block_, false);
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::GradedReverseLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elimination";
  }
  return "?";
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(std::size_t num_vars, std::vector<MultiPoly> gens) : num_vars_(num_vars) {
  for (MultiPoly& f : gens) {
    if (f.num_vars() != num_vars) throw DomainError("ideal generator lives in a different ring");
    if (!f.is_zero()) gens_.push_back(std::move(f));
  }
}

Ideal Ideal::unit(std::size_t num_vars) { return Ideal(num_vars, {MultiPoly::constant(num_vars, 1)}); }

bool Ideal::homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const MultiPoly& f) { return f.homogeneous_degree().has_value(); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (other.num_vars_ != num_vars_) throw DomainError("sum of ideals from different rings");
  return with(other.gens_);
}

Ideal Ideal::with(const std::vector<MultiPoly>& extra) const {
  std::vector<MultiPoly> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(num_vars_, std::move(gens));
}

// ----------------------------------------------------- sorted term lists

namespace {

struct Term {
  Monomial m;
  Rational c;
};
using TermList = std::vector<Term>;

TermList to_terms(const MultiPoly& f, const TermOrder& order) {
  TermList t;
  t.reserve(f.size());
  for (const auto& [m, c] : f.terms()) t.push_back({m, c});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
  return t;
}

MultiPoly from_terms(std::size_t num_vars, const TermList& t) {
  MultiPoly::TermMap map;
  for (const Term& term : t) map.emplace(term.m, term.c);
  return MultiPoly(num_vars, std::move(map));
}

// f[from..] - c * mono * g[gfrom..]
TermList sub_mul(const TermList& f, std::size_t from, const Rational& c, const Monomial& mono, const TermList& g,
                 std::size_t gfrom, const TermOrder& order) {
  TermList out;
  out.reserve(f.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = mono * g[j].m;
    if (i == f.size()) {
      out.push_back({std::move(gm), -c * g[j].c});
      ++j;
      continue;
    }
    int cmp = order.compare(f[i].m, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -c * g[j].c});
      ++j;
    } else {
      Rational v = f[i].c - c * g[j].c;
      if (sgn(v) != 0) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(TermList& f) {
  if (f.empty() || f.front().c == 1) return;
  const Rational inv = Rational(1) / f.front().c;
  for (Term& t : f) t.c *= inv;
}

struct GPoly {
  TermList terms;
  Monomial lead;
  int sugar = 0;
  bool active = true;
};

// Fully reduced normal form of f against the active members of `basis`.
TermList normal_form(TermList f, const std::vector<GPoly>& basis, const TermOrder& order, std::size_t skip = SIZE_MAX) {
  TermList rem;
  std::size_t i = 0;
  while (i < f.size()) {
    const GPoly* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || !basis[k].active) continue;
      if (basis[k].lead.divides(f[i].m)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor) {
      const Rational c = f[i].c / divisor->terms.front().c;
      f = sub_mul(f, i + 1, c, f[i].m / divisor->lead, divisor->terms, 1, order);
      i = 0;
    } else {
      rem.push_back(std::move(f[i]));
      ++i;
    }
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(std::size_t num_vars, TermOrder order, Budget budget)
      : num_vars_(num_vars), order_(std::move(order)), budget_(budget) {}

  void add_input(const MultiPoly& f) {
    if (f.is_zero()) return;
    TermList h = normal_form(to_terms(f, order_), polys_, order_);
    if (h.empty()) return;
    insert(std::move(h), f.total_degree());
  }

  void run() {
    while (!pairs_.empty()) {
      if (++processed_ > budget_.max_pairs) {
        throw BudgetExceeded("Groebner S-pair budget of " + std::to_string(budget_.max_pairs) + " exhausted");
      }
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      const GPoly& a = polys_[p.i];
      const GPoly& b = polys_[p.j];
      TermList s = sub_mul(TermList{}, 0, Rational(-1), p.lcm / a.lead, a.terms, 1, order_);
      s = sub_mul(s, 0, b.terms.front().c / b.terms.front().c, p.lcm / b.lead, b.terms, 1, order_);
      TermList h = normal_form(std::move(s), polys_, order_);
      if (!h.empty()) insert(std::move(h), p.sugar);
    }
  }

  std::vector<MultiPoly> reduced_basis() {
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (polys_[k].active) active.push_back(k);
    }
    std::vector<TermList> out;
    for (std::size_t k : active) {
      TermList tail(polys_[k].terms.begin() + 1, polys_[k].terms.end());
      TermList reduced = normal_form(std::move(tail), polys_, order_, k);
      TermList full;
      full.reserve(reduced.size() + 1);
      full.push_back(polys_[k].terms.front());
      full.insert(full.end(), reduced.begin(), reduced.end());
      make_monic(full);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const TermList& a, const TermList& b) {
      return order_.compare(a.front().m, b.front().m) < 0;
    });
    std::vector<MultiPoly> basis;
    for (const TermList& t : out) basis.push_back(from_terms(num_vars_, t));
    return basis;
  }

  const std::vector<GPoly>& polys() const { return polys_; }

 private:
  void insert(TermList h, int sugar) {
    make_monic(h);
    int deg = 0;
    for (const Term& t : h) deg = std::max(deg, t.m.degree());
    if (deg > budget_.max_degree) {
      throw BudgetExceeded("Groebner degree budget of " + std::to_string(budget_.max_degree) + " exceeded");
    }
    GPoly g{std::move(h), {}, std::max(sugar, deg), true};
    g.lead = g.terms.front().m;
    update(std::move(g));
  }

  // Gebauer-Moeller pair update for a new element h.
  void update(GPoly h) {
    const std::size_t hi = polys_.size();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!polys_[g].active) continue;
      c.push_back({g, h.lead.lcm(polys_[g].lead), h.lead.coprime(polys_[g].lead)});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> kept;
    for (Pair& p : pairs_) {
      const Monomial& l = p.lcm;
      if (!h.lead.divides(l) || polys_[p.i].lead.lcm(h.lead) == l || polys_[p.j].lead.lcm(h.lead) == l) {
        kept.push_back(std::move(p));
      }
    }
    for (const Cand& e : d) {
      if (e.coprime) continue;
      const GPoly& g = polys_[e.g];
      int sugar = std::max(g.sugar + (e.lcm.degree() - g.lead.degree()), h.sugar + (e.lcm.degree() - h.lead.degree()));
      kept.push_back({e.g, hi, e.lcm, sugar});
    }
    pairs_ = std::move(kept);
    for (GPoly& g : polys_) {
      if (g.active && h.lead.divides(g.lead)) g.active = false;
    }
    polys_.push_back(std::move(h));
  }

  std::size_t num_vars_;
  TermOrder order_;
  Budget budget_;
  std::vector<GPoly> polys_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace

// ---------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(std::size_t num_vars, TermOrder order, std::vector<MultiPoly> basis)
    : num_vars_(num_vars), order_(std::move(order)), basis_(std::move(basis)) {
  for (const MultiPoly& g : basis_) leads_.push_back(leading_monomial(g, order_));
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

MultiPoly GroebnerBasis::reduce(const MultiPoly& f) const {
  if (f.num_vars() != num_vars_) throw DomainError("reducing a polynomial from a different ring");
  std::vector<GPoly> reducers;
  reducers.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    reducers.push_back(GPoly{to_terms(basis_[k], order_), leads_[k], 0, true});
  }
  return from_terms(num_vars_, normal_form(to_terms(f, order_), reducers, order_));
}

Monomial leading_monomial(const MultiPoly& f, const TermOrder& order) {
  if (f.is_zero()) throw DomainError("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (!best || order.greater(m, *best)) best = &m;
  }
  return *best;
}

GroebnerBasis groebner_basis(const Ideal& ideal, const TermOrder& order, const Budget& budget) {
  if (order.kind() == TermOrder::Kind::Elimination && order.block().size() != ideal.num_vars()) {
    throw DomainError("elimination block does not match the ring");
  }
  Buchberger engine(ideal.num_vars(), order, budget);
  for (const MultiPoly& f : ideal.gens()) engine.add_input(f);
  engine.run();
  GroebnerBasis gb(ideal.num_vars(), order, engine.reduced_basis());
  for (const MultiPoly& f : ideal.gens()) {
    if (!gb.contains(f)) throw InternalAssertion("input generator does not reduce to zero: " + to_string(f));
  }
  return gb;
}

GroebnerBasis extend_basis(const GroebnerBasis& gb, const std::vector<MultiPoly>& extra, const Budget& budget) {
  Ideal ideal = gb.ideal().with(extra);
  return groebner_basis(ideal, gb.order(), budget);
}

// -------------------------------------------------- dimension and degree

int krull_dimension(const std::vector<Monomial>& leads, std::size_t num_vars) {
  if (num_vars > 26) throw DomainError("independent-set dimension limited to 26 variables");
  std::vector<std::uint32_t> supports;
  for (const Monomial& m : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (m[i] > 0) s |= (1u << i);
    }
    if (s == 0) return -1;  // unit ideal
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = num_vars == 32 ? ~0u : ((1u << num_vars) - 1);
  for (std::uint32_t u = 0;; ++u) {
    int size = std::popcount(u);
    if (size > best) {
      bool independent = std::none_of(supports.begin(), supports.end(), [u](std::uint32_t s) { return (s & ~u) == 0; });
      if (independent) best = size;
    }
    if (u == full) break;
  }
  return best;
}

namespace {

using TPoly = std::vector<Integer>;

void tp_add_shifted(TPoly& acc, const TPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> out;
  for (Monomial& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

TPoly hilbert_rec(std::vector<Monomial> gens, std::size_t num_vars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  const Monomial* mixed = nullptr;
  for (const Monomial& g : gens) {
    int vars = 0;
    for (std::size_t i = 0; i < num_vars; ++i) vars += g[i] > 0;
    if (vars >= 2) {
      mixed = &g;
      break;
    }
  }
  if (!mixed) {
    TPoly acc{1};
    for (const Monomial& g : gens) {
      TPoly next = acc;
      TPoly neg;
      for (const Integer& c : acc) neg.push_back(-c);
      tp_add_shifted(next, neg, static_cast<std::size_t>(g.degree()));
      acc = std::move(next);
    }
    return acc;
  }
  std::size_t pivot = 0;
  int best_count = -1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if ((*mixed)[i] == 0) continue;
    int count = 0;
    for (const Monomial& g : gens) count += g[i] > 0;
    if (count > best_count) {
      best_count = count;
      pivot = i;
    }
  }
  const Monomial x = Monomial::variable(num_vars, pivot);
  std::vector<Monomial> plus;
  std::vector<Monomial> colon;
  for (const Monomial& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    colon.push_back(g[pivot] > 0 ? g / x : g);
  }
  plus.push_back(x);
  TPoly result = hilbert_rec(std::move(plus), num_vars);
  tp_add_shifted(result, hilbert_rec(std::move(colon), num_vars), 1);
  return result;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& leads, std::size_t num_vars) {
  TPoly p = hilbert_rec(leads, num_vars);
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

HilbertData hilbert_data(const std::vector<Monomial>& leads, std::size_t num_vars) {
  TPoly p = hilbert_numerator(leads, num_vars);
  if (p.size() == 1 && p[0] == 0) return {-1, 0};
  int divisions = 0;
  auto value_at_one = [](const TPoly& q) {
    Integer s = 0;
    for (const Integer& c : q) s += c;
    return s;
  };
  while (value_at_one(p) == 0) {
    // p = (1 - t) q
    TPoly q(p.size() - 1);
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      running += p[i];
      q[i] = running;
    }
    p = std::move(q);
    ++divisions;
  }
  return {static_cast<int>(num_vars) - divisions, value_at_one(p)};
}

int projective_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  int krull = krull_dimension(gb.leading_monomials(), gb.num_vars());
  return krull >= 1 ? krull - 1 : -1;
}

int projective_dimension(const Ideal& ideal, const Budget& budget) {
  if (!ideal.homogeneous()) throw DomainError("projective dimension needs a homogeneous ideal");
  return projective_dimension(groebner_basis(ideal, TermOrder::grevlex(), budget));
}

Integer degree(const GroebnerBasis& gb) {
  HilbertData h = hilbert_data(gb.leading_monomials(), gb.num_vars());
  if (h.krull_dim < 1) throw PreconditionError("degree of an empty projective variety");
  return h.degree;
}

Integer degree(const Ideal& ideal, const Budget& budget) {
  if (!ideal.homogeneous()) throw DomainError("degree needs a homogeneous ideal");
  return degree(groebner_basis(ideal, TermOrder::grevlex(), budget));
}

bool is_projectively_empty(const Ideal& ideal, const Budget& budget) {
  return projective_dimension(ideal, budget) == -1;
}

// ----------------------------------------- quotients, saturation, elimination

namespace {

MultiPoly drop_trailing_vars(const MultiPoly& f, std::size_t num_vars) {
  MultiPoly out(num_vars);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = num_vars; i < m.num_vars(); ++i) {
      if (m[i] != 0) throw InternalAssertion("eliminated variable survived");
    }
    std::vector<int> e(m.exponents().begin(), m.exponents().begin() + static_cast<long>(num_vars));
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

// Groebner basis of `gens` (in n + extra variables) eliminating the trailing extra
// variables; returns the surviving elements back in the n-variable ring.
Ideal eliminate_trailing(std::size_t n, std::size_t extra, const std::vector<MultiPoly>& gens, const Budget& budget) {
  std::vector<bool> block(n + extra, false);
  for (std::size_t i = n; i < n + extra; ++i) block[i] = true;
  GroebnerBasis gb = groebner_basis(Ideal(n + extra, gens), TermOrder::elimination(block), budget);
  std::vector<MultiPoly> out;
  for (const MultiPoly& g : gb.basis()) {
    if (g.free_of(block)) out.push_back(drop_trailing_vars(g, n));
  }
  return Ideal(n, std::move(out));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
  if (a.num_vars() != b.num_vars()) throw DomainError("intersection of ideals from different rings");
  const std::size_t n = a.num_vars();
  if (a.is_zero() || b.is_zero()) return Ideal(n);
  const MultiPoly t = MultiPoly::variable(n + 1, n);
  const MultiPoly one_minus_t = MultiPoly::constant(n + 1, 1) - t;
  std::vector<MultiPoly> gens;
  for (const MultiPoly& f : a.gens()) gens.push_back(t * f.extend(n + 1));
  for (const MultiPoly& g : b.gens()) gens.push_back(one_minus_t * g.extend(n + 1));
  return eliminate_trailing(n, 1, gens, budget);
}

MultiPoly divide_exact(const MultiPoly& h, const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("division by zero polynomial");
  const TermOrder order = TermOrder::grevlex();
  TermList rem = to_terms(h, order);
  const TermList div = to_terms(f, order);
  MultiPoly q(h.num_vars());
  while (!rem.empty()) {
    if (!div.front().m.divides(rem.front().m)) throw DomainError("inexact polynomial division");
    const Rational c = rem.front().c / div.front().c;
    const Monomial mono = rem.front().m / div.front().m;
    q.add_term(mono, c);
    rem = sub_mul(rem, 1, c, mono, div, 1, order);
  }
  return q;
}

Ideal quotient(const Ideal& ideal, const MultiPoly& f, const Budget& budget) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  Ideal both = intersect(ideal, Ideal(ideal.num_vars(), {f}), budget);
  std::vector<MultiPoly> gens;
  for (const MultiPoly& h : both.gens()) gens.push_back(divide_exact(h, f));
  return Ideal(ideal.num_vars(), std::move(gens));
}

Ideal saturate_by_variable(const Ideal& ideal, std::size_t var, const Budget& budget) {
  const std::size_t n = ideal.num_vars();
  if (var >= n) throw DomainError("saturation variable out of range");
  std::vector<MultiPoly> gens;
  for (const MultiPoly& f : ideal.gens()) gens.push_back(f.extend(n + 1));
  if (gens.empty()) return Ideal(n);
  gens.push_back(MultiPoly::constant(n + 1, 1) - MultiPoly::variable(n + 1, n) * MultiPoly::variable(n + 1, var));
  return eliminate_trailing(n, 1, gens, budget);
}

Ideal saturate(const Ideal& ideal, const std::vector<std::size_t>& vars, const Budget& budget) {
  const std::size_t n = ideal.num_vars();
  if (vars.empty()) throw DomainError("saturation by an empty variable set");
  GroebnerBasis current = groebner_basis(ideal, TermOrder::grevlex(), budget);
  for (;;) {
    if (current.is_unit() || current.basis().empty()) return current.ideal();
    std::optional<Ideal> next;
    for (std::size_t v : vars) {
      Ideal colon = quotient(current.ideal(), MultiPoly::variable(n, v), budget);
      next = next ? intersect(*next, colon, budget) : colon;
    }
    GroebnerBasis gb = groebner_basis(*next, TermOrder::grevlex(), budget);
    if (gb == current) return current.ideal();
    current = std::move(gb);
  }
}

Ideal saturate_irrelevant(const Ideal& ideal, const Budget& budget) {
  if (!ideal.homogeneous()) throw DomainError("irrelevant saturation needs a homogeneous ideal");
  std::vector<std::size_t> vars(ideal.num_vars());
  std::iota(vars.begin(), vars.end(), 0);
  return saturate(ideal, vars, budget);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const Budget& budget) {
  const std::size_t n = ideal.num_vars();
  std::vector<bool> block(n, false);
  for (std::size_t v : drop) {
    if (v >= n) throw DomainError("elimination variable out of range");
    block[v] = true;
  }
  if (ideal.is_zero()) return Ideal(n);
  if (drop.empty()) return groebner_basis(ideal, TermOrder::grevlex(), budget).ideal();
  GroebnerBasis gb = groebner_basis(ideal, TermOrder::elimination(block), budget);
  std::vector<MultiPoly> out;
  for (const MultiPoly& g : gb.basis()) {
    if (g.free_of(block)) out.push_back(g);
  }
  return Ideal(n, std::move(out));
}

}  // namespace qst
