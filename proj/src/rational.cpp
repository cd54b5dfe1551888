#include "arcfree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace arcfree {

Rational parse_rational(std::string_view text)
{
	std::string s(text);
	auto bad = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };
	if (s.empty())
		throw bad();
	auto slash = s.find('/');
	auto digits_ok = [](std::string const &part, bool allow_sign) {
		std::size_t i = 0;
		if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+'))
			++i;
		if (i == part.size())
			return false;
		for (; i < part.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(part[i])))
				return false;
		return true;
	};
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	if (!digits_ok(num, true) || !digits_ok(den, false))
		throw bad();
	if (!num.empty() && num[0] == '+')
		num.erase(0, 1);
	mpz_class n(num, 10), d(den, 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" + s + "'");
	Rational q(n, d);
	q.canonicalize();
	return q;
}

} // namespace arcfree
