#pragma once

namespace qds {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qds
