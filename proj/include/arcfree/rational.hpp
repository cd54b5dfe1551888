#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace arcfree {

/// Exact arbitrary-precision rational. Every coefficient in the library is one of these.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
	Rational q(num, den);
	q.canonicalize();
	return q;
}

/// "p/q" or "p" (canonical, sign on the numerator).
inline std::string to_string(Rational const &q)
{
	return q.get_str();
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(Rational const &q)
{
	return sgn(q) == 0;
}

inline Rational factorial(int n)
{
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
	return Rational(f);
}

inline Rational binomial(int n, int k)
{
	if (k < 0 || n < 0 || k > n)
		return Rational(0);
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Rational(b);
}

/// n (n-1) ... (n-k+1) for any integer n, k >= 0.
inline Rational falling_factorial(long n, int k)
{
	Rational r(1);
	for (int i = 0; i < k; ++i)
		r *= Rational(n - i);
	return r;
}

} // namespace arcfree
