#pragma once

namespace curvkit {
inline constexpr const char* kVersion = "0.1.0";
}
