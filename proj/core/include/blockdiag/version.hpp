#pragma once

namespace blockdiag {

inline constexpr const char* kVersion = "0.1.0";

} // namespace blockdiag
