#pragma once

namespace ginimds {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ginimds
