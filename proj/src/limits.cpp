#include "arcfree/limits.hpp"

#include "arcfree/rational.hpp"

#include <cstdlib>

namespace arcfree {

namespace {

long parse_positive(char const *name, char const *value)
{
	char *end = nullptr;
	long v = std::strtol(value, &end, 10);
	if (end == value || *end != '\0' || v <= 0)
		throw std::invalid_argument(std::string(name) + " must be a positive integer, got '" + value + "'");
	return v;
}

} // namespace

ResourceCaps ResourceCaps::from_env(ResourceCaps base)
{
	if (char const *v = std::getenv("ARCFREE_MAX_MONOMIALS"))
		base.max_monomials = static_cast<std::size_t>(parse_positive("ARCFREE_MAX_MONOMIALS", v));
	if (char const *v = std::getenv("ARCFREE_MAX_WEIGHT"))
	{
		Rational w = parse_rational(v);
		Rational tw = 2 * w;
		if (tw <= 0 || tw.get_den() != 1)
			throw std::invalid_argument(std::string("ARCFREE_MAX_WEIGHT must be a positive half-integer, got '") + v +
			                            "'");
		base.max_twice_weight = static_cast<int>(tw.get_num().get_si());
	}
	if (char const *v = std::getenv("ARCFREE_MAX_DEGREE"))
		base.max_relation_degree = static_cast<int>(parse_positive("ARCFREE_MAX_DEGREE", v));
	return base;
}

void check_monomials(ResourceCaps const &caps, std::size_t count, std::string const &what)
{
	if (count > caps.max_monomials)
		throw ResourceLimit(what + ": " + std::to_string(count) + " monomials exceed the cap of " +
		                    std::to_string(caps.max_monomials) + " (ARCFREE_MAX_MONOMIALS)");
}

void check_twice_weight(ResourceCaps const &caps, int twice_weight, std::string const &what)
{
	if (twice_weight > caps.max_twice_weight)
		throw ResourceLimit(what + ": weight " + to_string(make_rational(twice_weight, 2)) + " exceeds the cap of " +
		                    to_string(make_rational(caps.max_twice_weight, 2)) + " (ARCFREE_MAX_WEIGHT)");
}

} // namespace arcfree
