#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "becnlo/params.hpp"

namespace becnlo {

// JSON scenario files. Recognised keys (all SI):
//   mass_kg, a11_m, a22_m, a12_m, im_a12_m (optional, default 0),
//   omega_rad_s, n_host, n_stored_max.
// Unknown keys, missing required keys, wrong types and invariant violations
// all raise ValidationError naming the key.
SystemConfig parse_config(std::string_view json_text);
SystemConfig load_config(const std::filesystem::path& path);

std::string config_to_json(const SystemConfig& config);

}  // namespace becnlo
