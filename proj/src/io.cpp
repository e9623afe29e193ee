#include "qst/io.hpp"

#include <fstream>
#include <sstream>

#include "qst/error.hpp"

namespace qst {

namespace {

std::vector<MultiPoly> parse_gens(const Json& gens, std::size_t vars, const std::vector<std::string>& names) {
  if (!gens.is_array()) throw ParseError("\"gens\" must be an array of polynomial strings", 0);
  std::vector<MultiPoly> out;
  for (const Json& g : gens) {
    if (!g.is_string()) throw ParseError("generators must be strings", 0);
    out.push_back(names.empty() ? parse_poly(g.get<std::string>(), vars) : parse_poly(g.get<std::string>(), names));
  }
  return out;
}

std::size_t require_vars(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j["vars"].is_number_integer() || j["vars"].get<long>() < 1) {
    throw ParseError("expected an object with a positive integer \"vars\"", 0);
  }
  return j["vars"].get<std::size_t>();
}

Json subset_json(const std::vector<std::size_t>& s) {
  Json a = Json::array();
  for (std::size_t i : s) a.push_back(i);
  return a;
}

std::string hp_string(const HighPrecision& x) { return to_string(x, 30); }

}  // namespace

Ideal ideal_from_json(const Json& j) {
  const std::size_t vars = require_vars(j);
  if (!j.contains("gens")) throw ParseError("ideal is missing \"gens\"", 0);
  return Ideal(vars, parse_gens(j["gens"], vars, {}));
}

Json ideal_to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const MultiPoly& f : ideal.gens()) gens.push_back(to_string(f));
  return Json{{"vars", ideal.num_vars()}, {"gens", gens}};
}

DivisorFamily family_from_json(const Json& j, const Budget& budget) {
  if (!j.is_object() || !j.contains("X") || !j.contains("members")) {
    throw ParseError("family needs \"X\" and \"members\"", 0);
  }
  Ideal x = ideal_from_json(j["X"]);
  FamilyMode mode = FamilyMode::Divisor;
  if (j.contains("mode")) {
    const std::string m = j["mode"].get<std::string>();
    if (m == "subscheme") {
      mode = FamilyMode::Subscheme;
    } else if (m != "divisor") {
      throw ParseError("mode must be \"divisor\" or \"subscheme\"", 0);
    }
  }
  if (!j["members"].is_array()) throw ParseError("\"members\" must be an array", 0);
  std::vector<std::vector<MultiPoly>> members;
  for (const Json& m : j["members"]) {
    if (m.is_string()) {
      members.push_back({parse_poly(m.get<std::string>(), x.num_vars())});
    } else {
      members.push_back(parse_gens(m, x.num_vars(), {}));
    }
  }
  return DivisorFamily(std::move(x), mode, std::move(members), budget);
}

Json chow_to_json(const ChowForm& form) {
  const auto names = form.var_names();
  return Json{{"vars", form.poly().num_vars()},
              {"names", names},
              {"n", form.dim()},
              {"N", form.ambient()},
              {"block_degree", form.block_degree()},
              {"gens", Json::array({to_string(form.poly(), names)})}};
}

ChowForm chow_from_json(const Json& j) {
  const std::size_t vars = require_vars(j);
  if (!j.contains("n") || !j.contains("N") || !j.contains("gens")) {
    throw ParseError("Chow form needs \"n\", \"N\" and \"gens\"", 0);
  }
  const auto n = j["n"].get<std::size_t>();
  const auto big_n = j["N"].get<std::size_t>();
  if ((n + 1) * (big_n + 1) != vars) throw ParseError("\"vars\" does not equal (n+1)(N+1)", 0);
  auto gens = parse_gens(j["gens"], vars, chow_var_names(n, big_n));
  if (gens.size() != 1) throw ParseError("a Chow form has exactly one generator", 0);
  return ChowForm(std::move(gens.front()), n, big_n);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json rational_json(const Rational& x) { return to_string(x); }

Json distributive_to_json(const DistributiveResult& r) {
  Json table = Json::array();
  for (const SubsetDimension& row : r.table) {
    table.push_back(Json{{"subset", subset_json(row.subset)},
                         {"dimension", row.dimension},
                         {"ratio", rational_json(row.ratio)}});
  }
  return Json{{"value", rational_json(r.value)},
              {"witness", subset_json(r.witness)},
              {"dim_X", r.dim_x},
              {"subsets", table}};
}

Json filtration_to_json(const Filtration& f) {
  return Json{{"dim_X", f.dim_x},
              {"t", f.t},
              {"prefix_dims", f.prefix_dims},
              {"multi_drop", f.multi_drop},
              {"multi_drop_steps", f.multi_drop_steps}};
}

Json generic_to_json(const GenericCombination& g) {
  Json coeffs = Json::array();
  for (const auto& row : g.coefficients) {
    Json r = Json::array();
    for (const Integer& c : row) r.push_back(c.get_str());
    coeffs.push_back(r);
  }
  Json polys = Json::array();
  for (const MultiPoly& p : g.polys) polys.push_back(to_string(p));
  return Json{{"coefficients", coeffs},
              {"polys", polys},
              {"attempts", g.attempts},
              {"coefficient_bound", g.coefficient_bound.get_str()},
              {"verified_empty", g.verified_empty}};
}

Json lemma32_to_json(const Lemma32Result& r) {
  return Json{{"delta", rational_json(r.delta)},
              {"lhs", rational_json(r.lhs)},
              {"rhs", r.rhs},
              {"holds", r.holds},
              {"equality", r.equality}};
}

Json chow_bound_to_json(const ChowBoundReport& r) {
  Json hyp = Json::array();
  for (const Hypothesis& h : r.hypotheses) hyp.push_back(Json{{"name", h.name}, {"holds", h.holds}});
  return Json{{"mode", r.mode == ChowBoundMode::Filtered ? "filtered" : "empty-intersection"},
              {"indices", subset_json(r.indices)},
              {"n", r.n},
              {"m", r.m},
              {"degree", r.degree.get_str()},
              {"delta_Y", rational_json(r.delta_y)},
              {"delta", rational_json(r.delta_used)},
              {"weight_sum", rational_json(r.weight_sum)},
              {"lhs", rational_json(r.lhs)},
              {"rhs", rational_json(r.rhs)},
              {"holds", r.holds},
              {"equality", r.equality},
              {"hypotheses", hyp}};
}

Json image_to_json(const ImageVariety& img) {
  return Json{{"ideal", ideal_to_json(img.ideal)},
              {"dim_X", img.dim_x},
              {"dim_Y", img.dim_y},
              {"deg_X", img.degree_x.get_str()},
              {"deg_Y", img.degree_y.get_str()},
              {"map_degree", img.map_degree}};
}

Json bounds_to_json(const BoundSet& a, const EfConstants& b) {
  return Json{{"alpha", rational_json(a.alpha)},
              {"A2", rational_json(a.a2)},
              {"logA1", hp_string(a.log_a1)},
              {"logA3", hp_string(a.log_a3)},
              {"B2", rational_json(b.b2)},
              {"logB1", hp_string(b.log_b1)},
              {"logB3", hp_string(b.log_b3)},
              {"H", a.h}};
}

Json proof_identities_to_json(const ProofIdentityReport& r) {
  return Json{{"delta_prime", rational_json(r.delta_prime)},
              {"R_prime", r.r_prime.get_str()},
              {"D_prime", r.d_prime.get_str()},
              {"B2_prime_times_Delta", rational_json(r.b2_times_delta)},
              {"A2", rational_json(r.a.a2)},
              {"A2_identity", r.a2_identity},
              {"logB1_prime", hp_string(r.b_prime.log_b1)},
              {"logT", hp_string(r.log_t)},
              {"T_bracket_read_as_floor", r.t_is_floor},
              {"logA1", hp_string(r.a.log_a1)},
              {"A1_bound", r.a1_bound},
              {"logA3", hp_string(r.a.log_a3)},
              {"logB3_prime", hp_string(r.b_prime.log_b3)},
              {"A3_slack", hp_string(r.a3_slack)},
              {"A3_bound", r.a3_bound}};
}

Json covering_to_json(const CoveringSet& w) {
  return Json{{"q", w.q()},
              {"theta", rational_json(w.theta())},
              {"grid", w.grid()},
              {"cardinality", w.size()},
              {"cardinality_bound", w.cardinality_bound()},
              {"exceeds_bound", w.exceeds_bound()}};
}

std::string covering_to_csv(const CoveringSet& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto t = w.tuple(i);
    for (std::size_t j = 0; j < t.size(); ++j) os << (j ? "," : "") << to_string(t[j]);
    os << "\n";
  }
  return os.str();
}

CoveringSet covering_from_csv(const std::string& text, const Rational& theta) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("covering CSV has no rows", 0);
  CoveringSet w(rows.front().size(), theta);
  if (rows.size() != w.size()) throw ParseError("covering CSV does not match the grid for this q and theta", 0);
  for (const auto& row : rows) {
    if (row.size() != w.q()) throw ParseError("covering CSV rows have different lengths", 0);
    std::vector<long> k;
    for (const Rational& c : row) {
      const Rational scaled = c * Rational(w.grid());
      if (scaled.get_den() != 1) throw ParseError("covering CSV entry off the grid", 0);
      k.push_back(scaled.get_num().get_si());
    }
    if (w.find(k) == w.size()) throw ParseError("covering CSV tuple not on the grid", 0);
  }
  return w;
}

Json audit_to_json(const AuditConfig& cfg, const AuditReport& r, const std::optional<HighPrecision>& height_floor) {
  Json rows = Json::array();
  for (const AuditRow& row : r.rows) {
    rows.push_back(Json{{"point", row.point.to_string()},
                        {"height", row.h.to_string()},
                        {"h", row.h.value()},
                        {"lhs", row.lhs},
                        {"ratio", row.ratio},
                        {"float_candidate", row.float_candidate},
                        {"flagged", row.flagged}});
  }
  Json on_div = Json::array();
  for (const ProjPoint& p : r.divisor_points) on_div.push_back(p.to_string());
  Json places = Json::array();
  for (const Place& v : cfg.places) places.push_back(v.to_string());
  Json summary{{"points", r.summary.points},
               {"on_divisors", r.summary.on_divisors},
               {"evaluated", r.summary.evaluated},
               {"float_candidates", r.summary.float_candidates},
               {"flagged", r.summary.flagged}};
  summary["min_ratio"] = r.summary.min_ratio ? Json(*r.summary.min_ratio) : Json(nullptr);
  summary["max_ratio"] = r.summary.max_ratio ? Json(*r.summary.max_ratio) : Json(nullptr);
  Json config{{"places", places},
              {"exponent", rational_json(cfg.exponent)},
              {"delta", rational_json(cfg.delta)},
              {"height_bound", cfg.height_bound},
              {"seed", cfg.seed}};
  config["height_floor_log"] = height_floor ? Json(hp_string(*height_floor)) : Json(nullptr);
  return Json{{"config", config}, {"summary", summary}, {"rows", rows}, {"points_on_divisors", on_div}};
}

std::string audit_to_csv(const AuditReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "point,h,lhs,ratio,flagged\n";
  for (const AuditRow& row : r.rows) {
    os << '"' << row.point.to_string() << "\"," << row.h.value() << "," << row.lhs << "," << row.ratio << ","
       << (row.flagged ? "true" : "false") << "\n";
  }
  return os.str();
}

Json proof_check_to_json(const ProofCheckReport& r) {
  Json samples = Json::array();
  for (const WeightSample& s : r.samples) samples.push_back(rational_json(s.aggregate));
  Json g = Json::array();
  for (const MultiPoly& f : r.g) g.push_back(to_string(f));
  const ProblemParams& p = r.params;
  Json params{{"n", p.n},     {"m", p.m},   {"N", p.big_n}, {"d", p.d},
              {"Delta", p.delta_deg}, {"delta_X", rational_json(p.delta_x)}, {"delta", rational_json(p.delta)},
              {"C", p.c},     {"s", p.s},   {"H", p.h}};
  Json out{{"params", params},
           {"distributive_constant_X", rational_json(r.distributive_x)},
           {"g", g}};
  if (r.image) out["image"] = image_to_json(*r.image);
  if (r.chow_y) out["chow_Y"] = chow_to_json(*r.chow_y);
  out["h_X"] = r.h_x;
  out["h1_one_g"] = r.h1_g;
  out["bound_h1"] = r.bound_h1;
  out["holds_h1"] = r.holds_h1;
  out["h_Y"] = r.h_y;
  out["bound_hY"] = r.bound_hy;
  out["holds_hY"] = r.holds_hy;
  out["weight_bound"] = rational_json(r.weight_bound);
  out["weight_aggregates"] = samples;
  out["holds_weights"] = r.holds_weights;
  return out;
}

}  // namespace qst
