#pragma once

namespace wsr {

inline constexpr const char* version = "0.1.0";

} // namespace wsr
