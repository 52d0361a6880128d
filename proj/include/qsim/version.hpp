#pragma once

namespace qsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsim
