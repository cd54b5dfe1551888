#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcfree {

/// Explicit resource caps; exceeding one is a hard error, never a silent truncation.
struct ResourceCaps {
	std::size_t max_monomials = 2'000'000; // per weight space
	int max_twice_weight = 16;             // 2 * maximal conformal weight
	int max_relation_degree = 8;

	/// Overrides from ARCFREE_MAX_MONOMIALS, ARCFREE_MAX_WEIGHT (conformal weight, may be
	/// "p/2") and ARCFREE_MAX_DEGREE when set.
	static ResourceCaps from_env(ResourceCaps base);
	static ResourceCaps from_env() { return from_env(ResourceCaps{}); }
};

class ResourceLimit : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

void check_monomials(ResourceCaps const &caps, std::size_t count, std::string const &what);
void check_twice_weight(ResourceCaps const &caps, int twice_weight, std::string const &what);

} // namespace arcfree
