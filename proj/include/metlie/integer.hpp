#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace metlie {

/// Arbitrary-precision integer used for every coefficient over ℤ.
using Integer = mpz_class;

/// g = s*a + t*b with g = gcd(a, b) >= 0.
struct Bezout
{
	Integer g;
	Integer s;
	Integer t;
};

Bezout bezout(Integer const &a, Integer const &b);

inline Integer gcd(Integer const &a, Integer const &b)
{
	Integer r;
	mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

inline Integer lcm(Integer const &a, Integer const &b)
{
	Integer r;
	mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

/// true iff d divides a (d may be negative; 0 divides only 0).
inline bool divides(Integer const &d, Integer const &a)
{
	if (d == 0)
		return a == 0;
	return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Non-negative residue of a modulo m (m > 0).
std::uint64_t mod_u64(Integer const &a, std::uint64_t m);

std::optional<std::uint64_t> to_u64(Integer const &a);

inline Integer pow_u64(std::uint64_t base, std::uint64_t exp)
{
	Integer r;
	mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
	return r;
}

inline std::string to_string(Integer const &a) { return a.get_str(); }

/// Non-negative Bézout data for machine integers: g = s*a + t*b.
struct SmallBezout
{
	std::int64_t g;
	std::int64_t s;
	std::int64_t t;
};

SmallBezout small_bezout(std::int64_t a, std::int64_t b);

} // namespace metlie
