#pragma once

namespace mollow {

inline constexpr const char* version = "0.1.0";

}  // namespace mollow
