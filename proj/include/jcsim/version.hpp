#pragma once

namespace jcsim {
inline constexpr const char* version = "1.0.0";
}
