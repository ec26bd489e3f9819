#include "becnlo/config_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "becnlo/errors.hpp"
#include "json.hpp"

namespace becnlo {

namespace {

using nlohmann::json;

constexpr std::array kKnownKeys = {"mass_kg",     "a11_m",   "a22_m",  "a12_m",
                                   "im_a12_m",    "omega_rad_s", "n_host",
                                   "n_stored_max"};

double get_real(const json& doc, const char* key, bool required, double fallback = 0.0) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) throw ValidationError(key, "missing required key");
    return fallback;
  }
  if (!it->is_number()) throw ValidationError(key, "expected a number");
  return it->get<double>();
}

long get_count(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(key, "missing required key");
  if (it->is_number_integer()) return it->get<long>();
  // Accept 1e6-style literals as long as they are integral.
  if (it->is_number_float()) {
    const double v = it->get<double>();
    if (v == static_cast<double>(static_cast<long>(v))) return static_cast<long>(v);
  }
  throw ValidationError(key, "expected an integer");
}

}  // namespace

SystemConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config", "top level must be an object");

  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ValidationError(key, "unknown key");
  }

  SystemConfig c;
  c.species.mass = get_real(doc, "mass_kg", true);
  c.species.a11 = get_real(doc, "a11_m", true);
  c.species.a22 = get_real(doc, "a22_m", true);
  c.species.a12 = get_real(doc, "a12_m", true);
  c.species.im_a12 = get_real(doc, "im_a12_m", false, 0.0);
  c.trap.omega = get_real(doc, "omega_rad_s", true);
  c.n_host = get_count(doc, "n_host");
  c.n_stored_max = get_count(doc, "n_stored_max");
  validate(c);
  return c;
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const SystemConfig& config) {
  json doc = {
      {"mass_kg", config.species.mass},   {"a11_m", config.species.a11},
      {"a22_m", config.species.a22},      {"a12_m", config.species.a12},
      {"im_a12_m", config.species.im_a12}, {"omega_rad_s", config.trap.omega},
      {"n_host", config.n_host},          {"n_stored_max", config.n_stored_max},
  };
  return doc.dump(2);
}

}  // namespace becnlo
