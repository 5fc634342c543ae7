#pragma once

namespace qsec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsec
