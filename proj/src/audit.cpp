#include "qst/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "qst/error.hpp"
#include "qst/geometry.hpp"

namespace qst {

std::vector<ProjPoint> enumerate_points(std::size_t big_n, long bound, const std::optional<Ideal>& x) {
  if (bound < 1) throw DomainError("height bound must be at least 1");
  if (big_n < 1) throw DomainError("ambient dimension must be at least 1");
  if (x && x->num_vars() != big_n + 1) throw DomainError("X lives in a different projective space");
  const std::size_t width = big_n + 1;
  std::vector<std::vector<long>> found;
  std::vector<long> v(width, -bound);
  for (;;) {
    auto first = std::find_if(v.begin(), v.end(), [](long a) { return a != 0; });
    if (first != v.end() && *first > 0) {
      long g = 0;
      for (long a : v) g = std::gcd(g, a);
      if (g == 1) found.push_back(v);
    }
    std::size_t i = width;
    while (i > 0 && v[i - 1] == bound) {
      v[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    ++v[i - 1];
  }
  auto height = [](const std::vector<long>& p) {
    long h = 0;
    for (long a : p) h = std::max(h, std::labs(a));
    return h;
  };
  std::sort(found.begin(), found.end(), [&](const std::vector<long>& a, const std::vector<long>& b) {
    const long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  std::vector<ProjPoint> out;
  out.reserve(found.size());
  std::vector<Integer> coords(width);
  for (const auto& p : found) {
    for (std::size_t i = 0; i < width; ++i) coords[i] = p[i];
    ProjPoint point{std::span<const Integer>(coords)};
    if (x) {
      const auto rc = point.rational_coords();
      bool on_x = std::all_of(x->gens().begin(), x->gens().end(),
                              [&](const MultiPoly& f) { return sgn(f.evaluate(rc)) == 0; });
      if (!on_x) continue;
    }
    out.push_back(std::move(point));
  }
  return out;
}

bool audit_flag_exact(const ApproxSum& sum, const ExactLog& h, const Rational& threshold) {
  if (h.mult() <= 1) return false;
  const long a = threshold.get_num().get_si();
  const long b = threshold.get_den().get_si();
  return pow(sum.powered, b) * pow(h.mult(), a * sum.exponent_lcm) <= 1;
}

std::optional<AuditRow> audit_point(const AuditConfig& cfg, const ProjPoint& p) {
  ApproxSum sum;
  try {
    sum = approx_sum(cfg.system, cfg.places, p);
  } catch (const PointOnDivisor&) {
    return std::nullopt;
  }
  const Rational threshold = cfg.exponent + cfg.delta;
  const ExactLog h = proj_height(p);
  const double hv = h.value();
  AuditRow row{p, h, sum.log_value, hv > 0 ? sum.log_value / hv : 0.0, false, false};
  if (hv > 0) {
    const double margin = 1e-9 * std::max(1.0, std::fabs(sum.log_value));
    row.float_candidate = sum.log_value <= -to_double(threshold) * hv + margin;
    if (row.float_candidate) row.flagged = audit_flag_exact(sum, h, threshold);
  }
  return row;
}

AuditReport audit(const AuditConfig& cfg, const Budget& budget) {
  if (cfg.places.empty()) throw PreconditionError("the place set S is empty");
  if (sgn(cfg.exponent) <= 0) throw PreconditionError("the exponent alpha(n+1) must be positive");
  if (sgn(cfg.delta) < 0) throw PreconditionError("delta must be nonnegative");
  if (cfg.height_bound < 1) throw PreconditionError("height bound must be at least 1");
  if (cfg.x.num_vars() != cfg.system.num_vars()) throw DomainError("X and the system live in different spaces");
  const GroebnerBasis gx = groebner_basis(cfg.x, TermOrder::grevlex(), budget);
  if (projective_dimension(gx) < 0) throw PreconditionError("X is empty");
  for (const MultiPoly& f : cfg.system.polys()) {
    if (gx.contains(f)) throw PreconditionError("X lies inside the divisor of " + to_string(f));
  }
  if (projective_dimension(extend_basis(gx, cfg.system.polys(), budget)) >= 0) {
    throw PreconditionError("the system has a common zero on X");
  }

  const std::optional<Ideal> restrict = cfg.x.is_zero() ? std::nullopt : std::optional<Ideal>(cfg.x);
  const std::vector<ProjPoint> points = enumerate_points(cfg.system.num_vars() - 1, cfg.height_bound, restrict);

  std::vector<std::optional<AuditRow>> results(points.size());
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, 16);
  if (points.size() < 1024) workers = 1;
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) results[i] = audit_point(cfg, points[i]);
  };
  if (workers == 1) {
    work(0, points.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (points.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(points.size(), w * chunk);
      const std::size_t end = std::min(points.size(), begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  AuditReport report;
  report.summary.points = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!results[i]) {
      ++report.summary.on_divisors;
      report.divisor_points.push_back(points[i]);
      continue;
    }
    AuditRow& row = *results[i];
    ++report.summary.evaluated;
    if (row.float_candidate) ++report.summary.float_candidates;
    if (row.flagged) ++report.summary.flagged;
    if (row.h.mult() > 1) {
      auto& lo = report.summary.min_ratio;
      auto& hi = report.summary.max_ratio;
      lo = lo ? std::min(*lo, row.ratio) : row.ratio;
      hi = hi ? std::max(*hi, row.ratio) : row.ratio;
    }
    if (row.flagged || cfg.keep_all_rows) report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::vector<Place> first_places(long s) {
  std::vector<Place> out{Place::infinity()};
  Integer p = 2;
  while (static_cast<long>(out.size()) < s) {
    out.push_back(Place::prime(p));
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

}  // namespace

ProofCheckReport proof_inequality_report(const Ideal& x, const PolySystem& system, const ProofCheckOptions& opts,
                                         const Budget& budget) {
  if (x.num_vars() != system.num_vars()) throw DomainError("X and the system live in different spaces");
  if (opts.s < 1 || opts.c < 1) throw PreconditionError("s and C must be positive");
  if (opts.samples < 0) throw PreconditionError("sample count must be nonnegative");
  ProofCheckReport r;
  const GroebnerBasis gx = groebner_basis(x, TermOrder::grevlex(), budget);
  const int n = projective_dimension(gx);
  if (n < 1) throw PreconditionError("X must have dimension at least 1");

  r.distributive_x = distributive_constant(DivisorFamily::divisors(x, system.polys(), budget), budget).value;
  const Rational delta_x = opts.delta_x ? *opts.delta_x : std::max(r.distributive_x, Rational(1));
  if (r.distributive_x > delta_x) {
    throw PreconditionError("delta_X = " + to_string(delta_x) + " is below the distributive constant " +
                            to_string(r.distributive_x));
  }

  ProblemParams& p = r.params;
  p.n = n;
  p.m = static_cast<long>(system.size()) - 1;
  p.big_n = static_cast<long>(x.num_vars()) - 1;
  p.d = degree(gx).get_si();
  p.delta_deg = system.degree_lcm();
  p.delta_x = delta_x;
  p.delta = opts.delta;
  p.c = opts.c;
  p.s = opts.s;

  r.chow_x = chow_form(x, n, budget);
  const MultiPoly fx[] = {r.chow_x->poly()};
  r.h_x = system_height(fx, HeightVariant::H).value();
  r.max_h_system = 0.0;
  for (const MultiPoly& f : system.polys()) {
    const MultiPoly pair[] = {MultiPoly::constant(f.num_vars(), 1), f};
    r.max_h_system = std::max(r.max_h_system, system_height(pair, HeightVariant::H).value());
  }
  p.h = height_aggregate(p.big_n, p.m, r.h_x, r.max_h_system);
  p.validate();

  for (std::size_t i = 0; i < system.size(); ++i) {
    r.g.push_back(system.polys()[i].pow(static_cast<unsigned>(p.delta_deg / system.degrees()[i])));
  }
  r.image = image_variety(x, r.g, budget);
  r.chow_y = chow_form(r.image->ideal, n, budget);

  std::vector<MultiPoly> one_g{MultiPoly::constant(x.num_vars(), 1)};
  one_g.insert(one_g.end(), r.g.begin(), r.g.end());
  r.h1_g = system_height(one_g, HeightVariant::H1).value();
  const double cms = static_cast<double>(p.c * p.m * p.s);
  r.bound_h1 = 6.0 * static_cast<double>(p.delta_deg * p.delta_deg) * cms * p.h;
  r.holds_h1 = r.h1_g <= r.bound_h1;

  const MultiPoly fy[] = {r.chow_y->poly()};
  r.h_y = system_height(fy, HeightVariant::H).value();
  r.bound_hy = 25.0 * static_cast<double>(p.n * p.m * p.d) * std::pow(static_cast<double>(p.delta_deg), p.n + 2) *
              static_cast<double>(p.c * p.s) * p.h;
  r.holds_hy = r.h_y <= r.bound_hy;

  r.weight_bound = Rational(1) / (alpha(p) * Rational(p.n + 1));
  r.weight_bound.canonicalize();
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> dist(0, 10);
  const std::vector<Place> places = first_places(p.s);
  const std::size_t width = system.size();
  r.holds_weights = true;
  for (int k = 0; k < opts.samples; ++k) {
    std::vector<std::vector<long>> raw(places.size(), std::vector<long>(width));
    long total = 0;
    for (auto& row : raw) {
      for (long& w : row) total += (w = dist(rng));
    }
    if (total == 0) {
      raw[0][0] = 1;
      total = 1;
    }
    WeightAssignment c(width - 1);
    for (std::size_t v = 0; v < places.size(); ++v) {
      std::vector<Rational> ws;
      for (long w : raw[v]) {
        Rational q(w, total);
        q.canonicalize();
        ws.push_back(q);
      }
      c.set(places[v], std::move(ws));
    }
    Rational e = chow_weight_aggregate(*r.chow_y, c);
    if (e < r.weight_bound) r.holds_weights = false;
    r.samples.push_back({std::move(c), std::move(e)});
  }

  if (!r.holds_h1) throw InternalAssertion("h_1(1, g) exceeds 6 Delta^2 C m s H");
  if (!r.holds_hy) throw InternalAssertion("h(Y) exceeds 25 n m d Delta^(n+2) C s H");
  if (!r.holds_weights) throw InternalAssertion("a weight sample has E_Y(c) below 1/(alpha(n+1))");
  return r;
}

}  // namespace qst
