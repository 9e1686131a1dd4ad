#pragma once

namespace mcb {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchemaPrefix = "mcb";

}  // namespace mcb
