#pragma once

#include <string_view>

namespace arcfree {

std::string_view tool_version();

} // namespace arcfree
