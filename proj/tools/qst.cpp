// Command-line front end for the qst library.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qst/audit.hpp"
#include "qst/bounds.hpp"
#include "qst/chow.hpp"
#include "qst/error.hpp"
#include "qst/geometry.hpp"
#include "qst/groebner.hpp"
#include "qst/heights.hpp"
#include "qst/io.hpp"

using namespace qst;

namespace {

struct Globals {
  std::optional<std::size_t> vars;
  bool json = false;
  std::uint64_t seed = 0;
  std::string budget_text;
  Budget budget;
};

std::vector<std::string> split(const std::string& text, char delim) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, delim)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

/// Each argument may hold several polynomials separated by ';'.
std::vector<std::string> flatten(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& a : args) {
    for (std::string& p : split(a, ';')) out.push_back(std::move(p));
  }
  return out;
}

std::size_t resolve_vars(const Globals& g, std::initializer_list<const std::vector<std::string>*> groups) {
  if (g.vars) {
    if (*g.vars < 2) throw DomainError("--vars must be at least 2");
    return *g.vars;
  }
  static const std::regex var_re("x([0-9]+)");
  std::size_t top = 0;
  bool seen = false;
  for (const auto* group : groups) {
    for (const std::string& text : *group) {
      for (auto it = std::sregex_iterator(text.begin(), text.end(), var_re); it != std::sregex_iterator(); ++it) {
        top = std::max<std::size_t>(top, std::stoul((*it)[1].str()));
        seen = true;
      }
    }
  }
  if (!seen) throw ParseError("cannot infer the number of variables; pass --vars", 0);
  return std::max<std::size_t>(top + 1, 2);
}

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, std::size_t vars) {
  std::vector<MultiPoly> out;
  for (const std::string& t : texts) out.push_back(parse_poly(t, vars));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_rational(s));
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (const std::string& s : split(text, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw ParseError("expected an integer, got \"" + s + "\"", 0);
    out.push_back(v);
  }
  return out;
}

PlaceSet parse_places(const std::string& text) {
  PlaceSet out;
  for (const std::string& s : split(text, ',')) out.insert(Place::parse(s));
  return out;
}

Budget parse_budget(const std::string& text) {
  const auto parts = parse_longs(text);
  if (parts.size() != 2 || parts[0] < 1 || parts[1] < 1) {
    throw ParseError("--budget expects PAIRS,DEG with positive entries", 0);
  }
  return Budget{static_cast<std::size_t>(parts[0]), static_cast<int>(parts[1])};
}

void emit(const Globals& g, const Json& out) {
  if (g.json) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : out.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

Json place_list(const PlaceSet& s) {
  Json a = Json::array();
  for (const Place& v : s) a.push_back(v.to_string());
  return a;
}

Json points_json(const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const ProjPoint& p : pts) a.push_back(p.to_string());
  return a;
}

ProblemParams params_from(long n, long m, long big_n, long d, long delta_deg, const std::string& delta_x,
                          const std::string& delta, long c, long s, double h) {
  ProblemParams p;
  p.n = n;
  p.m = m;
  p.big_n = big_n;
  p.d = d;
  p.delta_deg = delta_deg;
  p.delta_x = parse_rational(delta_x);
  p.delta = parse_rational(delta);
  p.c = c;
  p.s = s;
  p.h = h;
  p.validate();
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact heights, Chow forms and subspace-theorem constants over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::size_t vars_opt = 0;
  app.add_option("--vars", vars_opt, "number of variables x0..x{N}")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "print JSON");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget", g.budget_text, "Groebner budget as PAIRS,DEG");

  std::function<Json()> action;
  auto bind = [&](CLI::App* sub, std::function<Json()> f) { sub->callback([&action, f] { action = f; }); };

  // height point / height poly
  auto* height = app.add_subcommand("height", "heights of points and polynomial systems");
  height->require_subcommand(1);
  std::string point_text, place_text = "inf";
  std::vector<std::string> weil_f;
  auto* hpoint = height->add_subcommand("point", "height of a projective point");
  hpoint->add_option("point", point_text, "coordinates a0,a1,...")->required();
  hpoint->add_option("--place", place_text, "place for the local norm (inf or a prime)");
  hpoint->add_option("--weil", weil_f, "polynomial whose Weil function is evaluated at the point");
  bind(hpoint, [&] {
    const ProjPoint p = ProjPoint::parse(point_text);
    const Place v = Place::parse(place_text);
    const ExactLog h = proj_height(p);
    Json out{{"point", p.to_string()},
             {"height", h.to_string()},
             {"log_height", h.value()},
             {"support", place_list(point_support(p))},
             {"place", v.to_string()},
             {"norm", to_string(point_norm(p, v))}};
    const auto fs = flatten(weil_f);
    if (!fs.empty()) {
      const std::size_t nv = g.vars ? *g.vars : p.size();
      Json w = Json::array();
      for (const MultiPoly& f : parse_all(fs, nv)) {
        const ExactLog l = weil_divisor(f, v, p);
        w.push_back(Json{{"f", to_string(f)}, {"value", l.to_string()}, {"log", l.value()}});
      }
      out["weil"] = w;
    }
    return out;
  });

  std::vector<std::string> poly_args;
  std::string variant = "h";
  auto* hpoly = height->add_subcommand("poly", "height of a polynomial system");
  hpoly->add_option("polys", poly_args, "polynomials")->required();
  hpoly->add_option("--variant", variant, "h or h1")->check(CLI::IsMember({"h", "h1"}));
  bind(hpoly, [&] {
    const auto texts = flatten(poly_args);
    const auto polys = parse_all(texts, resolve_vars(g, {&texts}));
    const ExactLog h = system_height(polys, variant == "h" ? HeightVariant::H : HeightVariant::H1);
    return Json{{"variant", variant},
                {"height", h.to_string()},
                {"log_height", h.value()},
                {"support", place_list(coefficient_support(polys))}};
  });

  // norms
  std::string norm_variant = "max";
  auto* norms = app.add_subcommand("norms", "local norm of a polynomial system");
  norms->add_option("polys", poly_args, "polynomials")->required();
  norms->add_option("--place", place_text, "inf or a prime");
  norms->add_option("--variant", norm_variant, "max or sum")->check(CLI::IsMember({"max", "sum"}));
  bind(norms, [&] {
    const auto texts = flatten(poly_args);
    const auto polys = parse_all(texts, resolve_vars(g, {&texts}));
    const Place v = Place::parse(place_text);
    const Rational n = system_norm(polys, v, norm_variant == "max" ? NormVariant::Max : NormVariant::Sum);
    return Json{{"place", v.to_string()}, {"variant", norm_variant}, {"norm", to_string(n)}, {"log_norm", log_of(n)}};
  });

  // dimension / degree
  std::vector<std::string> gens_args;
  auto ideal_of = [&](const std::vector<std::string>& raw) {
    const auto texts = flatten(raw);
    const std::size_t nv = resolve_vars(g, {&texts});
    return Ideal(nv, parse_all(texts, nv));
  };
  auto* dim_cmd = app.add_subcommand("dimension", "projective dimension of V(I)");
  dim_cmd->add_option("gens", gens_args, "generators; none for the zero ideal");
  bind(dim_cmd, [&] {
    const Ideal ideal = ideal_of(gens_args);
    const GroebnerBasis gb = groebner_basis(ideal, TermOrder::grevlex(), g.budget);
    Json basis = Json::array();
    for (const MultiPoly& f : gb.basis()) basis.push_back(to_string(f));
    return Json{{"vars", ideal.num_vars()}, {"dimension", projective_dimension(gb)}, {"groebner_basis", basis}};
  });
  auto* deg_cmd = app.add_subcommand("degree", "degree of V(I)");
  deg_cmd->add_option("gens", gens_args, "generators; none for the zero ideal");
  bind(deg_cmd, [&] {
    const Ideal ideal = ideal_of(gens_args);
    const GroebnerBasis gb = groebner_basis(ideal, TermOrder::grevlex(), g.budget);
    return Json{{"vars", ideal.num_vars()}, {"dimension", projective_dimension(gb)}, {"degree", degree(gb).get_str()}};
  });

  // distconst
  std::string family_file;
  std::vector<std::string> x_args;
  std::size_t max_members = 12;
  auto* dist = app.add_subcommand("distconst", "distributive constant of a family on X");
  dist->add_option("--family", family_file, "JSON family file");
  dist->add_option("--X", x_args, "generators of X (omit for projective space)");
  dist->add_option("members", poly_args, "divisor equations");
  dist->add_option("--max-members", max_members, "subset enumeration cap");
  bind(dist, [&] {
    if (!family_file.empty()) {
      return distributive_to_json(distributive_constant(family_from_json(read_json_file(family_file), g.budget),
                                                        g.budget, max_members));
    }
    const auto xs = flatten(x_args);
    const auto ms = flatten(poly_args);
    if (ms.empty()) throw PreconditionError("no family members given");
    const std::size_t nv = resolve_vars(g, {&xs, &ms});
    DivisorFamily fam = DivisorFamily::divisors(Ideal(nv, parse_all(xs, nv)), parse_all(ms, nv), g.budget);
    return distributive_to_json(distributive_constant(fam, g.budget, max_members));
  });

  // filtration / lemma31
  auto filtration_inputs = [&] {
    const auto xs = flatten(x_args);
    const auto ds = flatten(poly_args);
    if (ds.empty()) throw PreconditionError("no divisors given");
    const std::size_t nv = resolve_vars(g, {&xs, &ds});
    return std::make_pair(Ideal(nv, parse_all(xs, nv)), parse_all(ds, nv));
  };
  auto* filt = app.add_subcommand("filtration", "dimension filtration of X by a divisor sequence");
  filt->add_option("--X", x_args, "generators of X");
  filt->add_option("divisors", poly_args, "divisor equations in order");
  bind(filt, [&] {
    const auto [x, ds] = filtration_inputs();
    return filtration_to_json(dimension_filtration(x, ds, g.budget));
  });
  int attempts = 16;
  auto* l31 = app.add_subcommand("lemma31", "generic combinations along the filtration");
  l31->add_option("--X", x_args, "generators of X");
  l31->add_option("divisors", poly_args, "hypersurfaces of one common degree");
  l31->add_option("--attempts", attempts, "retry budget")->check(CLI::PositiveNumber);
  bind(l31, [&] {
    const auto [x, ds] = filtration_inputs();
    const Filtration f = dimension_filtration(x, ds, g.budget);
    return Json{{"filtration", filtration_to_json(f)},
                {"combination", generic_to_json(generic_combinations(x, ds, f, g.seed, g.budget, attempts))}};
  });

  // lemma32
  std::string t_text, a_text;
  auto* l32 = app.add_subcommand("lemma32", "product inequality along a filtration");
  l32->add_option("--t", t_text, "t_0,...,t_n with t_0 = 1")->required();
  l32->add_option("--a", a_text, "a_0,...,a_{n-1}")->required();
  bind(l32, [&] { return lemma32_to_json(lemma32_eval(parse_longs(t_text), parse_rationals(a_text))); });

  // chow form / chow weight
  auto* chow = app.add_subcommand("chow", "Chow forms and Chow weights");
  chow->require_subcommand(1);
  auto chow_of_x = [&] {
    const Ideal x = ideal_of(x_args);
    const int n = projective_dimension(x, g.budget);
    if (n < 0) throw PreconditionError("X is empty");
    return chow_form(x, n, g.budget);
  };
  auto* cform = chow->add_subcommand("form", "Chow form of X");
  cform->add_option("--X", x_args, "generators of X");
  bind(cform, [&] { return chow_to_json(chow_of_x()); });
  std::string form_file, c_text;
  auto* cweight = chow->add_subcommand("weight", "Chow weight e_X(c)");
  cweight->add_option("--X", x_args, "generators of X");
  cweight->add_option("--form", form_file, "JSON Chow form file");
  cweight->add_option("--c", c_text, "weights c_0,...,c_N")->required();
  bind(cweight, [&] {
    const ChowForm form = form_file.empty() ? chow_of_x() : chow_from_json(read_json_file(form_file));
    const auto c = parse_rationals(c_text);
    if (c.size() != form.ambient() + 1) throw DomainError("need exactly N+1 weights");
    return Json{{"weight", to_string(chow_weight(form, c))}, {"block_degree", form.block_degree()}};
  });

  // thm22
  std::string idx_text, mode = "empty", delta_text;
  auto* thm = app.add_subcommand("thm22", "Chow-weight lower bound for coordinate hyperplanes");
  thm->add_option("--X", x_args, "generators of Y");
  thm->add_option("--indices", idx_text, "hyperplane indices i_0,...,i_m")->required();
  thm->add_option("--c", c_text, "weights c_0,...,c_N")->required();
  thm->add_option("--mode", mode, "filtered or empty")->check(CLI::IsMember({"filtered", "empty"}));
  thm->add_option("--delta", delta_text, "delta for the empty-intersection mode");
  bind(thm, [&] {
    const Ideal y = ideal_of(x_args);
    const int n = projective_dimension(y, g.budget);
    if (n < 1) throw PreconditionError("Y must have positive dimension");
    const ChowForm form = chow_form(y, n, g.budget);
    std::vector<std::size_t> idx;
    for (long i : parse_longs(idx_text)) {
      if (i < 0) throw DomainError("negative hyperplane index");
      idx.push_back(static_cast<std::size_t>(i));
    }
    const auto c = parse_rationals(c_text);
    std::optional<Rational> delta;
    if (!delta_text.empty()) delta = parse_rational(delta_text);
    return chow_bound_to_json(thm22_report(y, form, idx, c,
                                           mode == "filtered" ? ChowBoundMode::Filtered : ChowBoundMode::EmptyIntersection,
                                           delta, g.budget));
  });

  // image
  auto* img = app.add_subcommand("image", "closure of the image of X under a polynomial map");
  img->add_option("--X", x_args, "generators of X");
  img->add_option("maps", poly_args, "g_0,...,g_R of one common degree")->required();
  bind(img, [&] {
    const auto xs = flatten(x_args);
    const auto gs = flatten(poly_args);
    const std::size_t nv = resolve_vars(g, {&xs, &gs});
    return image_to_json(image_variety(Ideal(nv, parse_all(xs, nv)), parse_all(gs, nv), g.budget));
  });

  // bounds
  long bn = 1, bm = 1, bbig_n = 1, bd = 1, bdelta_deg = 1, bc = 1, bs = 1;
  long ef_d = 0, ef_r = 0;
  double bh = 0.0;
  std::string bdelta_x = "1", bdelta = "1/2";
  bool identities = false;
  auto* bnd = app.add_subcommand("bounds", "explicit constants of the subspace theorem");
  bnd->add_option("--n", bn, "dim X");
  bnd->add_option("--m", bm, "number of divisors minus one");
  bnd->add_option("--N", bbig_n, "ambient dimension");
  bnd->add_option("--d", bd, "degree of X");
  bnd->add_option("--Delta", bdelta_deg, "lcm of the divisor degrees");
  bnd->add_option("--deltaX", bdelta_x, "distributive bound");
  bnd->add_option("--delta", bdelta, "delta in (0,1)");
  bnd->add_option("--C", bc, "field degree");
  bnd->add_option("--s", bs, "number of places");
  bnd->add_option("--H", bh, "height aggregate");
  bnd->add_option("--D", ef_d, "degree for the twisted-height constants (default d)");
  bnd->add_option("--R", ef_r, "ambient dimension for the twisted-height constants (default N)");
  bnd->add_flag("--identities", identities, "also check the substitution identities");
  bind(bnd, [&] {
    const ProblemParams p = params_from(bn, bm, bbig_n, bd, bdelta_deg, bdelta_x, bdelta, bc, bs, bh);
    const EfConstants ef = ef_constants(bn, Integer(ef_d ? ef_d : bd), Integer(ef_r ? ef_r : bbig_n), p.delta);
    Json out = bounds_to_json(theorem_constants(p), ef);
    if (identities) out["identities"] = proof_identities_to_json(check_proof_identities(p));
    return out;
  });

  // covering make / covering check
  auto* cov = app.add_subcommand("covering", "grid covering sets of weight tuples");
  cov->require_subcommand(1);
  std::size_t cq = 2;
  std::string theta_text = "1/2", out_path, csv_file, lambda_text;
  bool csv = false;
  auto* cmake_cmd = cov->add_subcommand("make", "build the grid set W");
  cmake_cmd->add_option("--q", cq, "tuple length")->required();
  cmake_cmd->add_option("--theta", theta_text, "theta in (0,1/2]");
  cmake_cmd->add_flag("--csv", csv, "print the tuples as CSV");
  cmake_cmd->add_option("--out", out_path, "write the CSV tuples to a file");
  bind(cmake_cmd, [&] {
    const CoveringSet w = covering_set(cq, parse_rational(theta_text));
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw ParseError("cannot write " + out_path, 0);
      f << covering_to_csv(w);
    }
    if (csv) {
      std::cout << covering_to_csv(w);
      return Json();
    }
    return covering_to_json(w);
  });
  auto* ccheck = cov->add_subcommand("check", "find a covering tuple for (A, Lambda)");
  ccheck->add_option("--q", cq, "tuple length");
  ccheck->add_option("--theta", theta_text, "theta in (0,1/2]");
  ccheck->add_option("--W", csv_file, "CSV file written by covering make");
  ccheck->add_option("--A", a_text, "A_1,...,A_q")->required();
  ccheck->add_option("--lambda", lambda_text, "Lambda > 0")->required();
  bind(ccheck, [&] {
    const Rational theta = parse_rational(theta_text);
    const auto a = parse_rationals(a_text);
    std::optional<CoveringSet> w;
    if (!csv_file.empty()) {
      std::ifstream f(csv_file);
      if (!f) throw ParseError("cannot open " + csv_file, 0);
      std::stringstream ss;
      ss << f.rdbuf();
      w.emplace(covering_from_csv(ss.str(), theta));
    } else {
      w.emplace(covering_set(a.size(), theta));
    }
    const CoveringWitness wit = covering_check(*w, a, parse_rational(lambda_text));
    Json tuple = Json::array();
    for (const Rational& c : wit.tuple) tuple.push_back(to_string(c));
    return Json{{"index", wit.index}, {"tuple", tuple}, {"cardinality", w->size()}};
  });

  // enumerate
  long bound = 1;
  auto* en = app.add_subcommand("enumerate", "rational points of bounded height");
  en->add_option("--bound", bound, "multiplicative height bound")->required();
  en->add_option("--X", x_args, "restrict to V(X)");
  bind(en, [&] {
    const auto xs = flatten(x_args);
    const std::size_t nv = resolve_vars(g, {&xs});
    std::optional<Ideal> x;
    if (!xs.empty()) x.emplace(nv, parse_all(xs, nv));
    const auto pts = enumerate_points(nv - 1, bound, x);
    return Json{{"count", pts.size()}, {"points", points_json(pts)}};
  });

  // audit
  std::string places_text = "inf", exponent_text, audit_delta = "0";
  bool all_rows = false;
  unsigned threads = 0;
  auto* aud = app.add_subcommand("audit", "approximation-inequality audit over points of bounded height");
  aud->add_option("system", poly_args, "f_0,...,f_m")->required();
  aud->add_option("--X", x_args, "generators of X");
  aud->add_option("--places", places_text, "places of S, e.g. inf,2,3");
  aud->add_option("--exponent", exponent_text, "alpha(n+1); computed from X and the system when omitted");
  aud->add_option("--delta", audit_delta, "delta >= 0");
  aud->add_option("--bound", bound, "height bound")->required();
  aud->add_flag("--all", all_rows, "report every evaluated point");
  aud->add_flag("--csv", csv, "print CSV rows instead of JSON");
  aud->add_option("--out", out_path, "write the report to a file");
  aud->add_option("--threads", threads, "worker threads (0 = hardware)");
  bind(aud, [&] {
    const auto xs = flatten(x_args);
    const auto fs = flatten(poly_args);
    const std::size_t nv = resolve_vars(g, {&xs, &fs});
    AuditConfig cfg{PolySystem(parse_all(fs, nv)), Ideal(nv, parse_all(xs, nv)), parse_places(places_text), 0, 0,
                    bound, all_rows, g.seed, threads};
    cfg.delta = parse_rational(audit_delta);
    std::optional<HighPrecision> floor;
    const long n = projective_dimension(cfg.x, g.budget);
    const long m = static_cast<long>(cfg.system.size()) - 1;
    Rational dx = 1;
    if (n >= 1) {
      dx = std::max(Rational(1),
                    distributive_constant(DivisorFamily::divisors(cfg.x, cfg.system.polys(), g.budget), g.budget).value);
    }
    if (!exponent_text.empty()) {
      cfg.exponent = parse_rational(exponent_text);
    } else {
      if (n < 1) throw PreconditionError("X must have positive dimension to derive the exponent");
      ProblemParams p;
      p.n = n;
      p.m = m;
      p.delta_x = dx;
      cfg.exponent = alpha(p) * Rational(n + 1);
    }
    const AuditReport report = audit(cfg, g.budget);
    if (n >= 1 && m >= n && sgn(cfg.delta) > 0 && cfg.delta < 1) {
      ProblemParams p;
      p.n = n;
      p.m = m;
      p.big_n = static_cast<long>(nv) - 1;
      p.d = degree(cfg.x, g.budget).get_si();
      p.delta_deg = cfg.system.degree_lcm();
      p.delta_x = dx;
      p.delta = cfg.delta;
      p.s = static_cast<long>(cfg.places.size());
      const MultiPoly fx[] = {chow_form(cfg.x, static_cast<int>(n), g.budget).poly()};
      double max_h = 0.0;
      for (const MultiPoly& f : cfg.system.polys()) {
        const MultiPoly pair[] = {MultiPoly::constant(nv, 1), f};
        max_h = std::max(max_h, system_height(pair, HeightVariant::H).value());
      }
      p.h = height_aggregate(p.big_n, p.m, system_height(fx, HeightVariant::H).value(), max_h);
      floor = theorem_constants(p).log_a3 + boost::multiprecision::log(HighPrecision(p.h));
    }
    const std::string text = csv ? audit_to_csv(report) : audit_to_json(cfg, report, floor).dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw ParseError("cannot write " + out_path, 0);
      f << text;
      return Json{{"written", out_path}, {"flagged", report.summary.flagged}};
    }
    std::cout << text;
    return Json();
  });

  // proofcheck
  std::string pc_delta_x, pc_delta = "1/2";
  long pc_s = 1, pc_c = 1;
  int samples = 50;
  auto* pc = app.add_subcommand("proofcheck", "check the intermediate inequalities of the proof");
  pc->add_option("system", poly_args, "f_0,...,f_m")->required();
  pc->add_option("--X", x_args, "generators of X");
  pc->add_option("--deltaX", pc_delta_x, "distributive bound (default: computed)");
  pc->add_option("--delta", pc_delta, "delta in (0,1)");
  pc->add_option("--s", pc_s, "number of places");
  pc->add_option("--C", pc_c, "field degree");
  pc->add_option("--samples", samples, "weight samples");
  bind(pc, [&] {
    const auto xs = flatten(x_args);
    const auto fs = flatten(poly_args);
    const std::size_t nv = resolve_vars(g, {&xs, &fs});
    ProofCheckOptions opts;
    if (!pc_delta_x.empty()) opts.delta_x = parse_rational(pc_delta_x);
    opts.delta = parse_rational(pc_delta);
    opts.s = pc_s;
    opts.c = pc_c;
    opts.seed = g.seed;
    opts.samples = samples;
    return proof_check_to_json(
        proof_inequality_report(Ideal(nv, parse_all(xs, nv)), PolySystem(parse_all(fs, nv)), opts, g.budget));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.count("--vars")) g.vars = vars_opt;
    if (!g.budget_text.empty()) g.budget = parse_budget(g.budget_text);
    if (!action) return 2;
    const Json out = action();
    if (!out.is_null()) emit(g, out);
    return 0;
  } catch (const qst::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
