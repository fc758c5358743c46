#pragma once

namespace spinbath {

inline constexpr const char* kToolVersion = "spinbath 0.1.0";

}  // namespace spinbath
