#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockvolt/entire_function.hpp"
#include "fockvolt/quadrature.hpp"

namespace fockvolt {

/// Malformed input; `path` names the offending field ("$.coeffs[3][0]" style).
struct IoError : std::runtime_error {
  std::string path;
  IoError(const std::string& what, std::string p)
      : std::runtime_error(what + " at " + p), path(std::move(p)) {}
};

/// Function spec files:
///   {"type": "poly",    "coeffs": [[re,im], ...]}
///   {"type": "exppoly", "p": [[re,im], ...], "q": [[re,im], ...]}
/// Coefficients ascend in degree; a bare number is accepted for a real
/// coefficient; non-finite numbers are rejected.
EntireFunction parse_function(const nlohmann::json& j, const std::string& root = "$");
EntireFunction load_function(const std::string& file_path);

Poly parse_coeff_list(const nlohmann::json& j, const std::string& path);
nlohmann::json coeffs_to_json(const Poly& p);
nlohmann::json function_to_json(const EntireFunction& f);  // poly / exppoly only

QuadConfig config_from_json(const nlohmann::json& j, const std::string& root = "$");
nlohmann::json config_to_json(const QuadConfig& cfg);

/// RFC-4180 CSV: header row, fields quoted when they contain separators.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
std::string csv_field(const std::string& raw);

}  // namespace fockvolt
