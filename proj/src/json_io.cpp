#include "permfunc/json_io.hpp"

#include <string>

#include "permfunc/errors.hpp"

namespace permfunc {

nlohmann::json scalar_to_json(const GaussianRational& z) {
  return {{"re", z.re().get_str()}, {"im", z.im().get_str()}};
}

GaussianRational scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    return GaussianRational::parse(j.get<std::string>());
  }
  if (j.is_object() && j.contains("re") && j.contains("im") && j["re"].is_string() && j["im"].is_string()) {
    return {parse_rational(j["re"].get<std::string>()), parse_rational(j["im"].get<std::string>())};
  }
  throw ParseError("scalar must be {\"re\":\"p/q\",\"im\":\"p/q\"} or a literal string, got " + j.dump());
}

nlohmann::json parse_json_document(std::string_view text, std::string_view what) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + " JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(std::string(what) + " JSON must be an object");
  }
  return doc;
}

} // namespace permfunc
