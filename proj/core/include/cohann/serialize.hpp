#pragma once

#include "cohann/annihilator.hpp"
#include "cohann/catalog.hpp"
#include "cohann/invariants.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace cohann {

using Json = nlohmann::json;

// Matrix factorization files:
//   {"vars": [..], "f": "poly", "A": [["poly",..],..],
//    "B": [["poly",..],..] | "adjugate", "label": "A_n:j"}
Json mf_to_json(const MatrixFactorization& m);
/// Parses and validates; a "B" of "adjugate" builds the adjugate partner.
MatrixFactorization mf_from_json(const Json& j);

// Catalog files: {"f": "..", "vars": [..], "complete": bool, "entries": [MF, ..]}
Json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const Json& j);

// {"generators": [..], "dim_quotient": n, "truncation": N, "stabilized": bool}
Json ideal_to_json(const TruncatedIdeal& ideal);

Json certificate_to_json(const HomotopyCertificate& cert);
Json report_to_json(const InvariantReport& report);

/// Stable text form: two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// Reads and parses a JSON file, mapping any failure to ParseError.
Json read_json_file(const std::string& path);

}  // namespace cohann
