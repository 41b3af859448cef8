#pragma once

namespace gwdiv {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gwdiv
