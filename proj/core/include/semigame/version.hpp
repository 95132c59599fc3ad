#pragma once

namespace semigame {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace semigame
