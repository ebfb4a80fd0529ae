#pragma once

#include "nhmf/nearly.hpp"
#include "nhmf/structure.hpp"

#include <json.hpp>

#include <string>

namespace nhmf {

using Json = nlohmann::ordered_json;

/// {"weight": k, "truncation": N, "coeffs": [[rational strings per c_0], ...]}
/// Outer index is the X-degree, inner index the q-exponent; every inner
/// array has length N+1. The zero form serializes with one all-zero row.
Json form_to_json(const NearlyForm& f);
NearlyForm form_from_json(const Json& j);

/// {"weight": k, "e2_coeff": "p/q", "parts": [{"ell": l, "coeffs": [...]}]}
/// with parts in increasing ell. The reader infers the truncation from the
/// first part; an optional "truncation" key disambiguates part-free
/// documents (without it they parse with truncation 0).
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// Parse helpers that wrap json exceptions into ParseError.
Json parse_json(const std::string& text);

} // namespace nhmf
