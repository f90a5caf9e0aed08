#pragma once

namespace altkg {

inline constexpr const char* kVersion = "0.1.0";

} // namespace altkg
