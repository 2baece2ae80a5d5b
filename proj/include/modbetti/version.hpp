#pragma once

namespace modbetti {

inline constexpr const char* kVersion = "0.3.1";

}  // namespace modbetti
