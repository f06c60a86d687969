#pragma once

// JSON encoding of A-parameters. Rationals are written as strings ("1/4").

#include <json.hpp>
#include <string>

#include "speh/error.hpp"
#include "speh/parameters.hpp"
#include "speh/rational.hpp"

namespace speh {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const auto& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::ParseError, std::string(key) + " must be a rational string or an integer");
}

inline Json to_json(const AParameter& psi) {
  Json s = Json::array();
  for (const auto& x : psi.summands)
    s.push_back({{"rho", x.rho_label}, {"rho_dim", x.rho_dim}, {"k", x.k}, {"m", x.m}, {"alpha", to_string(x.alpha)}});
  return {{"n", psi.n}, {"summands", s}};
}

/// Parses and validates.
inline AParameter aparameter_from_json(const Json& j) {
  AParameter psi;
  try {
    psi.n = j.at("n").get<int>();
    for (const auto& s : j.at("summands")) {
      Summand x;
      x.rho_label = s.value("rho", std::string("rho"));
      x.rho_dim = s.value("rho_dim", 1);
      x.k = s.at("k").get<int>();
      x.m = s.value("m", 1);
      x.alpha = rational_field(s, "alpha");
      psi.summands.push_back(std::move(x));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  psi.validate();
  return psi;
}

inline AParameter aparameter_from_json(const std::string& text) { return aparameter_from_json(parse_json(text)); }

}  // namespace speh
