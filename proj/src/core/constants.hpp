#pragma once

#include <numbers>

namespace grunwald {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace grunwald
