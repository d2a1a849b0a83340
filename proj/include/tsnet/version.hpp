#pragma once

namespace tsnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tsnet
