#pragma once

namespace flowforms {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace flowforms
