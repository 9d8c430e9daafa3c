#pragma once

namespace lorosc {
inline constexpr const char* kVersion = "0.1.0";
}
