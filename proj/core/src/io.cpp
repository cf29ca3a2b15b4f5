#include "rqdyn/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rqdyn {

nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open file: " + path.string());
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

Vector vector_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) {
    throw ConfigError("field '" + field + "' must be an array of numbers");
  }
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw ConfigError("field '" + field + "' must contain only numbers");
    }
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ConfigError("field '" + field + "' must be an array of rows");
  }
  const size_t cols = j[0].size();
  Matrix m(j.size(), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ConfigError("field '" + field + "' must be rectangular");
    }
    for (size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) {
        throw ConfigError("field '" + field + "' must contain only numbers");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          j[i][c].get<double>();
    }
  }
  return m;
}

nlohmann::json to_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::isfinite(v(i))) {
      j.push_back(v(i));
    } else {
      j.push_back(nullptr);
    }
  }
  return j;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    j.push_back(to_json(Vector(m.row(i).transpose())));
  }
  return j;
}

Network network_from_json(const nlohmann::json& j) {
  if (!j.contains("species") || !j.contains("reactions")) {
    throw ConfigError("network document needs 'species' and 'reactions'");
  }
  std::vector<std::string> species;
  for (const auto& s : j.at("species")) {
    if (!s.is_string()) throw ConfigError("'species' must be an array of names");
    species.push_back(s.get<std::string>());
  }
  std::vector<ReactionSpec> reactions;
  for (const auto& r : j.at("reactions")) {
    if (!r.contains("name") || !r.contains("stoich") || !r.at("stoich").is_object()) {
      throw ConfigError("each reaction needs 'name' and a 'stoich' object");
    }
    ReactionSpec spec;
    spec.name = r.at("name").get<std::string>();
    for (const auto& [species_name, coeff] : r.at("stoich").items()) {
      if (!coeff.is_number()) {
        throw ConfigError("reaction '" + spec.name + "' has a non-numeric coefficient");
      }
      spec.stoichiometry[species_name] = coeff.get<double>();
    }
    reactions.push_back(std::move(spec));
  }
  try {
    return build_network(std::move(species), reactions);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

nlohmann::json network_to_json(const Network& net) {
  nlohmann::json j;
  j["species"] = net.species;
  j["reactions"] = nlohmann::json::array();
  for (int r = 0; r < net.reaction_count(); ++r) {
    nlohmann::json stoich;
    for (int i = 0; i < net.species_count(); ++i) {
      if (net.S(i, r) != 0.0) stoich[net.species[i]] = net.S(i, r);
    }
    j["reactions"].push_back({{"name", net.reactions[r]}, {"stoich", stoich}});
  }
  return j;
}

LogLinearSystem system_from_json(const nlohmann::json& j) {
  if (!j.contains("K") || !j.contains("K_eq")) {
    throw ConfigError("system document needs 'K' and 'K_eq'");
  }
  try {
    return LogLinearSystem(matrix_from_json(j.at("K"), "K"),
                           vector_from_json(j.at("K_eq"), "K_eq"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ControlInput control_from_json(const nlohmann::json& j, int dim) {
  const std::string type = j.value("type", std::string("constant"));
  try {
    if (type == "constant") {
      return ControlInput::constant(vector_from_json(j.at("u"), "u"));
    }
    if (type == "sinusoidal") {
      Vector phase;
      if (j.contains("phase")) phase = vector_from_json(j.at("phase"), "phase");
      if (!j.contains("omega") || !j.at("omega").is_number()) {
        throw ConfigError("sinusoidal control needs a numeric 'omega'");
      }
      return ControlInput::sinusoidal(vector_from_json(j.at("amplitude"), "amplitude"),
                                      j.at("omega").get<double>(), std::move(phase));
    }
    if (type == "piecewise") {
      std::vector<PiecewiseSegment> segments;
      for (const auto& seg : j.at("segments")) {
        segments.push_back({seg.at("t_begin").get<double>(),
                            seg.at("t_end").get<double>(),
                            vector_from_json(seg.at("u"), "u")});
      }
      return ControlInput::piecewise(std::move(segments));
    }
    if (type == "zero") {
      return ControlInput::zero(dim);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed control document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown control type '" + type + "'");
}

Vector parse_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stod(token, &used));
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
        ++used;
      }
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse '" + token + "' as a number");
    }
  }
  if (values.empty()) {
    throw ConfigError("empty numeric list");
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string csv_string(const std::vector<std::string>& columns, const Matrix& values) {
  if (static_cast<Eigen::Index>(columns.size()) != values.cols()) {
    throw std::invalid_argument("csv_string: header width does not match data");
  }
  std::string out;
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      if (c) out += ',';
      out += format_double(values(i, c));
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& columns, const Matrix& values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot write file: " + path.string());
  }
  out << csv_string(columns, values);
}

}  // namespace rqdyn
