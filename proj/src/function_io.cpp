#include "fockvolt/function_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

namespace fockvolt {

namespace {

double parse_finite_number(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number()) throw IoError("expected a number", path);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw IoError("non-finite number", path);
  return v;
}

Complex parse_coeff(const nlohmann::json& j, const std::string& path) {
  if (j.is_number()) return Complex{parse_finite_number(j, path), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw IoError("expected [re, im] or a real number", path);
  return Complex{parse_finite_number(j[0], path + "[0]"), parse_finite_number(j[1], path + "[1]")};
}

}  // namespace

Poly parse_coeff_list(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw IoError("expected an array of coefficients", path);
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(parse_coeff(j[i], path + "[" + std::to_string(i) + "]"));
  return Poly{std::move(coeffs)};
}

EntireFunction parse_function(const nlohmann::json& j, const std::string& root) {
  if (!j.is_object()) throw IoError("expected an object", root);
  if (!j.contains("type")) throw IoError("missing field", root + ".type");
  if (!j["type"].is_string()) throw IoError("expected a string", root + ".type");
  const std::string type = j["type"].get<std::string>();
  if (type == "poly") {
    if (!j.contains("coeffs")) throw IoError("missing field", root + ".coeffs");
    return EntireFunction::poly(parse_coeff_list(j["coeffs"], root + ".coeffs"));
  }
  if (type == "exppoly") {
    if (!j.contains("p")) throw IoError("missing field", root + ".p");
    if (!j.contains("q")) throw IoError("missing field", root + ".q");
    return EntireFunction::exp_poly(parse_coeff_list(j["p"], root + ".p"),
                                    parse_coeff_list(j["q"], root + ".q"));
  }
  throw IoError("unknown function type '" + type + "' (expected poly or exppoly)", root + ".type");
}

EntireFunction load_function(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw IoError("cannot open function file '" + file_path + "'", "$");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what(), "$");
  }
  return parse_function(j);
}

nlohmann::json coeffs_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

nlohmann::json function_to_json(const EntireFunction& f) {
  switch (f.kind()) {
    case EntireFunction::Kind::Poly:
      return {{"type", "poly"}, {"coeffs", coeffs_to_json(f.poly_coeffs())}};
    case EntireFunction::Kind::ExpPoly:
      return {{"type", "exppoly"},
              {"p", coeffs_to_json(f.exp_prefactor())},
              {"q", coeffs_to_json(f.exp_exponent())}};
    default:
      return {{"type", "lazy"}, {"describe", f.describe()}};
  }
}

QuadConfig config_from_json(const nlohmann::json& j, const std::string& root) {
  if (!j.is_object()) throw IoError("expected an object", root);
  QuadConfig cfg;
  auto num = [&](const char* key, double& out) {
    if (j.contains(key)) out = parse_finite_number(j[key], root + "." + key);
  };
  auto integer = [&](const char* key, int& out) {
    if (j.contains(key)) {
      if (!j[key].is_number_integer()) throw IoError("expected an integer", root + "." + key);
      out = j[key].get<int>();
    }
  };
  num("rel_tol", cfg.rel_tol);
  num("abs_tol", cfg.abs_tol);
  num("max_radius", cfg.max_radius);
  integer("radial_panels", cfg.radial_panels);
  integer("angular_samples", cfg.angular_samples);
  integer("max_refinements", cfg.max_refinements);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what(), root);
  }
  return cfg;
}

nlohmann::json config_to_json(const QuadConfig& cfg) {
  return {{"rel_tol", cfg.rel_tol},
          {"abs_tol", cfg.abs_tol},
          {"max_radius", cfg.max_radius},
          {"radial_panels", cfg.radial_panels},
          {"angular_samples", cfg.angular_samples},
          {"max_refinements", cfg.max_refinements}};
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << csv_field(header[i]);
  os << "\r\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\r\n";
  }
}

}  // namespace fockvolt
