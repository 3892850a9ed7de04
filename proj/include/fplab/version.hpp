#pragma once

#include <string_view>

namespace fplab {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace fplab
