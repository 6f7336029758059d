#pragma once

namespace relwave {

inline constexpr const char* version = "0.1.0";

}  // namespace relwave
