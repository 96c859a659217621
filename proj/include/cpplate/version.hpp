#pragma once

namespace cpplate {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kProgramName = "cpplate";

}  // namespace cpplate
