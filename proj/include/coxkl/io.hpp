#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "coxkl/engine.hpp"
#include "coxkl/systems.hpp"

namespace coxkl {

// All JSON formats use 1-based generator indices to match the CLI word
// syntax; vertex indices are 0-based.

// {"rank": n, "labels": [[...]]} with 0 encoding an infinite label.
CoxeterMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CoxeterMatrix& m);

// {"n": int, "rank": [...], "covers": [[a,b],...], "h": [bool,...]}
AbstractPoset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const AbstractPoset& p);

// {"partner": [int,...]}
Matching matching_from_json(const nlohmann::json& j);
nlohmann::json matching_to_json(const Matching& m);

// Coefficient array, low degree first.
nlohmann::json poly_to_json(const PolyZ& p);
PolyZ poly_from_json(const nlohmann::json& j);

// {"kind": "right"|"left", "J": [...], "s": i, "t": j,
//  "dihedral_partner": [...], "axioms": {"R1": bool, ...}}
nlohmann::json system_to_json(const SystemCandidate& c, const AxiomReport& r);

// {"top": int, "entries": [{"u": int, "poly": [...]}]}
nlohmann::json rtable_to_json(const RTable& t);

// Hasse diagram in DOT: filled circles for flagged vertices, open circles
// otherwise; the matched edges, when a matching is given, dashed with
// penwidth 3.
std::string poset_to_dot(const AbstractPoset& p,
                         const Matching* matching = nullptr);

}  // namespace coxkl
