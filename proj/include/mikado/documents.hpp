#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mikado/coordinatize.hpp"
#include "mikado/extension.hpp"
#include "mikado/galois_field.hpp"
#include "mikado/linear_space.hpp"
#include "mikado/magma.hpp"

namespace mikado {

// JSON documents. Parsing failures throw ParseError with a "line L, column C"
// prefix; structural validation of the content (two lines through a pair,
// reducible modulus, ...) keeps the library's own error.

/// { "points": [...], "triples": [[a, b, c], ...] }. Duplicate points or
/// triples are rejected.
LinearSpace parse_structure(std::string_view text);
nlohmann::json structure_json(const LinearSpace& space);

/// A structure document with an extra "base": [names].
struct PairDocument {
    LinearSpace space;
    PointSet base;
};
PairDocument parse_pair(std::string_view text);
nlohmann::json pair_json(const LinearSpace& space, PointSet base);

/// { "order": n, "table": [[...], ...], "elements": [names] (optional) }.
struct MagmaDocument {
    FiniteMagma magma;
    /// Empty when the document carries no names.
    std::vector<std::string> elements;
};
MagmaDocument parse_magma(std::string_view text);
nlohmann::json magma_json(const FiniteMagma& magma, const std::vector<std::string>& elements = {});

/// { "q": n, "default_rule": "floor-delta" | "constant-<c>",
///   "overrides": [{ "code": ..., "bound": ... }], "flags": ["U", "T", "C"] }.
MuFunction parse_mu(std::string_view text);
nlohmann::json mu_json(const MuFunction& mu);

/// { "p": p, "n": n, "modulus": [c0, c1, ...] (optional) }.
GaloisField parse_field(std::string_view text);
nlohmann::json field_json(const GaloisField& field);

/// A structure document with "H": [[x, y, z], ...] meaning x*y = z, and an
/// optional "base".
struct TauPrimeDocument {
    TauPrimeStructure structure;
    PointSet base;
};
TauPrimeDocument parse_tau_prime(std::string_view text);
nlohmann::json tau_prime_json(const TauPrimeStructure& s, PointSet base = {});

/// Two-space indented JSON with a trailing newline.
std::string print_document(const nlohmann::json& doc);

}  // namespace mikado
