#pragma once

namespace rodnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rodnet
