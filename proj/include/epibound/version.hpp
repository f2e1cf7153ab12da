#pragma once

namespace epibound {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace epibound
