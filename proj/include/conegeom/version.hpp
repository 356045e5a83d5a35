#pragma once

namespace conegeom {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace conegeom
