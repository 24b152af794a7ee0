#pragma once

namespace bikraw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bikraw
