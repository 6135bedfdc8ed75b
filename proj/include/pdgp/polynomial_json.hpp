#pragma once

#include <string>

#include "json.hpp"
#include "pdgp/polynomial.hpp"

namespace pdgp {

/// {"var":"z","terms":[[exp,"coeff"],...]}; coefficients are decimal strings.
inline nlohmann::ordered_json to_json(const UniPoly& p, char var = 'z') {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.to_string()});
  return {{"var", std::string(1, var)}, {"terms", std::move(terms)}};
}

/// {"vars":["w","z"],"terms":[[wexp,zexp,"coeff"],...]}.
inline nlohmann::ordered_json to_json(const BiPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.to_string()});
  return {{"vars", {"w", "z"}}, {"terms", std::move(terms)}};
}

}  // namespace pdgp
