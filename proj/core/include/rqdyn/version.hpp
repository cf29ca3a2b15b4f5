#pragma once

namespace rqdyn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rqdyn
