#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "permfunc/gaussian_rational.hpp"

namespace permfunc {

/// {"re":"p/q","im":"p/q"}; integers are written without a denominator.
nlohmann::json scalar_to_json(const GaussianRational& z);
/// Accepts the object form above or a scalar literal string such as "2-1i".
GaussianRational scalar_from_json(const nlohmann::json& j);
/// Parses text as a JSON object; throws ParseError naming what on failure.
nlohmann::json parse_json_document(std::string_view text, std::string_view what);

} // namespace permfunc
