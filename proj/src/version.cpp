#include "arcfree/version.hpp"

#ifndef ARCFREE_VERSION
#define ARCFREE_VERSION "unknown"
#endif

namespace arcfree {

std::string_view tool_version()
{
	return ARCFREE_VERSION;
}

} // namespace arcfree
