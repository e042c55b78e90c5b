#pragma once

namespace rydsim {
inline constexpr const char* version_string = "0.1.0";
}
