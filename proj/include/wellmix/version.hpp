#pragma once

namespace wellmix {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wellmix
