#pragma once

namespace circsep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace circsep
