#pragma once

namespace rainbowtri {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rainbowtri
