#pragma once

namespace seaforge {

inline constexpr const char* kGeneratorVersion = "seaforge-1.0.0";

} // namespace seaforge
