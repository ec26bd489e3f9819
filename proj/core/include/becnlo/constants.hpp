#pragma once

#include <numbers>

namespace becnlo {

// CODATA 2018 reduced Planck constant, J s.
inline constexpr double kHbar = 1.054571817e-34;

inline constexpr double kPi = std::numbers::pi;

}  // namespace becnlo
