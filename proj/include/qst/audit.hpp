#pragma once

// Rational point enumeration, the approximation-inequality audit and the
// regression checks for the intermediate inequalities of the proof.

#include <cstdint>
#include <optional>
#include <vector>

#include "qst/bounds.hpp"
#include "qst/chow.hpp"
#include "qst/groebner.hpp"
#include "qst/heights.hpp"

namespace qst {

/// All points of P^N(Q) of multiplicative height at most `bound`, each once in canonical
/// form, optionally restricted to the zero set of X. Sorted by height, then coordinates.
std::vector<ProjPoint> enumerate_points(std::size_t big_n, long bound, const std::optional<Ideal>& x = std::nullopt);

struct AuditConfig {
  PolySystem system;
  Ideal x;
  PlaceSet places;
  Rational exponent;  // alpha(n+1)
  Rational delta;
  long height_bound = 1;
  bool keep_all_rows = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct AuditRow {
  ProjPoint point;
  ExactLog h;
  double lhs = 0.0;
  double ratio = 0.0;          // lhs / h; 0 when h = 0
  bool float_candidate = false;
  bool flagged = false;        // decided by the exact recheck
};

struct AuditSummary {
  std::size_t points = 0;
  std::size_t on_divisors = 0;
  std::size_t evaluated = 0;
  std::size_t float_candidates = 0;
  std::size_t flagged = 0;
  std::optional<double> min_ratio;
  std::optional<double> max_ratio;
};

struct AuditReport {
  std::vector<AuditRow> rows;                 // flagged rows, or every evaluated row when keep_all_rows
  std::vector<ProjPoint> divisor_points;      // points lying on some f_i
  AuditSummary summary;
};

/// Exact form of the flag: powered^b * H^(a L) <= 1 with exponent + delta = a/b, H the
/// multiplicative height and powered, L from the approximation sum.
bool audit_flag_exact(const ApproxSum& sum, const ExactLog& h, const Rational& threshold);

/// Evaluates one point; std::nullopt when it lies on some f_i.
std::optional<AuditRow> audit_point(const AuditConfig& cfg, const ProjPoint& p);

/// Validates the configuration (nonempty S, positive exponent, X not inside any f_i and
/// X meeting all f_i empty) and audits every enumerated point of X.
AuditReport audit(const AuditConfig& cfg, const Budget& budget = {});

struct ProofCheckOptions {
  std::optional<Rational> delta_x;  // defaults to the computed distributive constant
  Rational delta = Rational(1, 2);
  long s = 1;
  long c = 1;
  std::uint64_t seed = 0;
  int samples = 50;
};

struct WeightSample {
  WeightAssignment weights;
  Rational aggregate;  // E_Y(c)
};

struct ProofCheckReport {
  ProblemParams params;
  Rational distributive_x;
  std::vector<MultiPoly> g;
  std::optional<ImageVariety> image;
  std::optional<ChowForm> chow_x;
  std::optional<ChowForm> chow_y;
  double h_x = 0.0;
  double max_h_system = 0.0;
  double h1_g = 0.0;
  double bound_h1 = 0.0;
  bool holds_h1 = false;
  double h_y = 0.0;
  double bound_hy = 0.0;
  bool holds_hy = false;
  Rational weight_bound;  // 1 / (alpha (n+1))
  std::vector<WeightSample> samples;
  bool holds_weights = false;
};

/// Builds g_i = f_i^{Delta / deg f_i}, the image Y, its Chow form, and checks the height
/// bounds for h_1(1, g) and h(Y) and the Chow-weight lower bound on random weight samples.
/// A failed inequality throws InternalAssertion.
ProofCheckReport proof_inequality_report(const Ideal& x, const PolySystem& system, const ProofCheckOptions& opts,
                                         const Budget& budget = {});

}  // namespace qst
