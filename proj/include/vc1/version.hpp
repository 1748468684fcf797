#pragma once

namespace vc1 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vc1
