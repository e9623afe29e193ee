#pragma once

// JSON and CSV encodings of ideals, families, Chow forms and reports.
// Rationals are written as "p/q" strings so nothing is rounded.

#include <string>

#include "json.hpp"
#include "qst/audit.hpp"
#include "qst/bounds.hpp"
#include "qst/chow.hpp"
#include "qst/geometry.hpp"
#include "qst/groebner.hpp"

namespace qst {

using Json = nlohmann::ordered_json;

/// {"vars": N+1, "gens": ["poly", ...]}; an empty "gens" list is the zero ideal.
Ideal ideal_from_json(const Json& j);
Json ideal_to_json(const Ideal& ideal);

/// {"X": ideal, "mode": "divisor" | "subscheme", "members": [[poly, ...], ...]}.
/// Divisor members may also be written as bare strings.
DivisorFamily family_from_json(const Json& j, const Budget& budget = {});

/// Same layout as an ideal, with variables named u00, u01, ... and the block data attached.
Json chow_to_json(const ChowForm& form);
ChowForm chow_from_json(const Json& j);

/// Parses a whole file into JSON; ParseError on malformed input.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

Json rational_json(const Rational& x);
Json distributive_to_json(const DistributiveResult& r);
Json filtration_to_json(const Filtration& f);
Json generic_to_json(const GenericCombination& g);
Json lemma32_to_json(const Lemma32Result& r);
Json chow_bound_to_json(const ChowBoundReport& r);
Json image_to_json(const ImageVariety& img);
Json bounds_to_json(const BoundSet& a, const EfConstants& b);
Json proof_identities_to_json(const ProofIdentityReport& r);
Json covering_to_json(const CoveringSet& w);
std::string covering_to_csv(const CoveringSet& w);
/// Reads tuples written by covering_to_csv back into a set; the grid and theta must match.
CoveringSet covering_from_csv(const std::string& text, const Rational& theta);

Json audit_to_json(const AuditConfig& cfg, const AuditReport& r, const std::optional<HighPrecision>& height_floor);
/// point,h,lhs,ratio,flagged
std::string audit_to_csv(const AuditReport& r);
Json proof_check_to_json(const ProofCheckReport& r);

}  // namespace qst
