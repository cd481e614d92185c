#pragma once

namespace sumrules {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sumrules
