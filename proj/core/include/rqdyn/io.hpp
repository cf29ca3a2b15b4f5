#pragma once

#include "rqdyn/control.hpp"
#include "rqdyn/dynamics.hpp"
#include "rqdyn/network.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace rqdyn {

/// Malformed or inconsistent configuration input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::filesystem::path& path);

Vector vector_from_json(const nlohmann::json& j, const std::string& field);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);

/// Network definition document: {"species": [...], "reactions":
/// [{"name": ..., "stoich": {species: coefficient, ...}}, ...]}.
Network network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const Network& net);

/// System document: {"K": [[...]], "K_eq": [...]}.
LogLinearSystem system_from_json(const nlohmann::json& j);

/// Control document: {"type": "constant"|"sinusoidal"|"piecewise", ...}.
ControlInput control_from_json(const nlohmann::json& j, int dim);

/// Comma-separated list of doubles ("1,2.5,-3e-4") -> vector.
Vector parse_vector(const std::string& text);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

std::string csv_string(const std::vector<std::string>& columns, const Matrix& values);
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& columns, const Matrix& values);

}  // namespace rqdyn
