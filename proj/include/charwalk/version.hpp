#pragma once

#define CHARWALK_VERSION "0.1.0"

namespace charwalk {

inline constexpr const char* version() { return CHARWALK_VERSION; }

} // namespace charwalk
