#pragma once

namespace sqz {
inline constexpr const char* kVersion = "1.0.0";
}
