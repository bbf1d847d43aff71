#pragma once

#include <complex>
#include <numbers>

namespace torusgreen {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

}  // namespace torusgreen
