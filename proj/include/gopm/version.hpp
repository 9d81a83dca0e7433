#pragma once

namespace gopm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gopm
