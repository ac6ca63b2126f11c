#pragma once

namespace blockshift {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace blockshift
