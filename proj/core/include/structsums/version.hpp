#pragma once

#include <string_view>

namespace structsums {

inline constexpr std::string_view kToolName = "structsums";
inline constexpr std::string_view kToolVersion = "0.1.0";

} // namespace structsums
