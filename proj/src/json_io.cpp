#include "nhmf/json_io.hpp"

#include "nhmf/errors.hpp"

#include <utility>

namespace nhmf {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(what) + " document is missing \"" + key + "\"");
    return j.at(key);
}

long require_integer(const Json& j, const char* key, const char* what) {
    const Json& v = require_key(j, key, what);
    if (!v.is_number_integer())
        throw ParseError(std::string(what) + " field \"" + key + "\" must be an integer");
    return v.get<long>();
}

std::vector<Rational> parse_coeff_row(const Json& row, long truncation, const char* what) {
    if (!row.is_array() || static_cast<long>(row.size()) != truncation + 1)
        throw ParseError(std::string(what) + " coefficient rows must have length truncation + 1");
    std::vector<Rational> out;
    out.reserve(row.size());
    for (const Json& v : row) {
        if (!v.is_string())
            throw ParseError(std::string(what) + " coefficients must be rational strings");
        out.push_back(parse_rational(v.get<std::string>()));
    }
    return out;
}

Json series_to_row(const QSeries& s) {
    Json row = Json::array();
    for (long n = 0; n <= s.truncation(); ++n)
        row.push_back(rational_to_string(s.coeff(n)));
    return row;
}

} // namespace

Json form_to_json(const NearlyForm& f) {
    Json coeffs = Json::array();
    if (f.is_zero()) {
        coeffs.push_back(series_to_row(QSeries(f.truncation())));
    } else {
        for (int j = 0; j <= f.degree(); ++j)
            coeffs.push_back(series_to_row(f.coeff_x(j)));
    }
    return Json{{"weight", f.weight()}, {"truncation", f.truncation()}, {"coeffs", std::move(coeffs)}};
}

NearlyForm form_from_json(const Json& j) {
    long weight = require_integer(j, "weight", "form");
    long truncation = require_integer(j, "truncation", "form");
    if (truncation < 0)
        throw ParseError("form truncation must be >= 0");
    const Json& coeffs = require_key(j, "coeffs", "form");
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("form field \"coeffs\" must be a non-empty array of rows");
    std::vector<QSeries> cx;
    cx.reserve(coeffs.size());
    for (const Json& row : coeffs)
        cx.emplace_back(truncation, parse_coeff_row(row, truncation, "form"));
    return {static_cast<int>(weight), truncation, std::move(cx)};
}

Json decomposition_to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& [ell, f] : d.parts)
        parts.push_back(Json{{"ell", ell}, {"coeffs", series_to_row(f.series())}});
    return Json{{"weight", d.weight},
                {"e2_coeff", rational_to_string(d.e2_coeff)},
                {"parts", std::move(parts)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.weight = static_cast<int>(require_integer(j, "weight", "decomposition"));
    if (j.is_object() && j.contains("truncation")) {
        d.truncation = require_integer(j, "truncation", "decomposition");
    } else {
        const Json& parts = require_key(j, "parts", "decomposition");
        if (parts.is_array() && !parts.empty() && parts.front().is_object() &&
            parts.front().contains("coeffs") && parts.front().at("coeffs").is_array() &&
            !parts.front().at("coeffs").empty())
            d.truncation = static_cast<long>(parts.front().at("coeffs").size()) - 1;
        else
            d.truncation = 0;
    }
    if (d.truncation < 0)
        throw ParseError("decomposition truncation must be >= 0");
    const Json& e2 = require_key(j, "e2_coeff", "decomposition");
    if (!e2.is_string())
        throw ParseError("decomposition field \"e2_coeff\" must be a rational string");
    d.e2_coeff = parse_rational(e2.get<std::string>());
    const Json& parts = require_key(j, "parts", "decomposition");
    if (!parts.is_array())
        throw ParseError("decomposition field \"parts\" must be an array");
    for (const Json& entry : parts) {
        int ell = static_cast<int>(require_integer(entry, "ell", "decomposition part"));
        QSeries series(d.truncation,
                       parse_coeff_row(require_key(entry, "coeffs", "decomposition part"), d.truncation,
                                       "decomposition part"));
        if (!d.parts.emplace(ell, HolomorphicForm(ell, std::move(series))).second)
            throw ParseError("decomposition has a duplicate part for weight " + std::to_string(ell));
    }
    return d;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace nhmf
