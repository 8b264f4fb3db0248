#pragma once

namespace darboux {

inline constexpr const char* kVersion = "0.1.0";

} // namespace darboux
