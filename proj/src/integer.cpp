#include "metlie/integer.hpp"
#include "metlie/errors.hpp"

#include <fmt/format.h>

namespace metlie {

Bezout bezout(Integer const &a, Integer const &b)
{
	Bezout r;
	mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
	           b.get_mpz_t());
	return r;
}

std::uint64_t mod_u64(Integer const &a, std::uint64_t m)
{
	Integer r;
	Integer mm(static_cast<unsigned long>(m));
	mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
	return r.get_ui();
}

std::optional<std::uint64_t> to_u64(Integer const &a)
{
	if (a < 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64)
		return std::nullopt;
	static_assert(sizeof(unsigned long) == 8);
	return static_cast<std::uint64_t>(a.get_ui());
}

SmallBezout small_bezout(std::int64_t a, std::int64_t b)
{
	std::int64_t old_r = a, r = b;
	std::int64_t old_s = 1, s = 0;
	std::int64_t old_t = 0, t = 1;
	while (r != 0)
	{
		std::int64_t q = old_r / r;
		std::int64_t tmp = old_r - q * r;
		old_r = r;
		r = tmp;
		tmp = old_s - q * s;
		old_s = s;
		s = tmp;
		tmp = old_t - q * t;
		old_t = t;
		t = tmp;
	}
	if (old_r < 0)
		return {-old_r, -old_s, -old_t};
	return {old_r, old_s, old_t};
}

ParseError::ParseError(std::string const &message, int line, int column)
    : Error(fmt::format("{}:{}: {}", line, column, message)), line_(line),
      column_(column)
{}

} // namespace metlie
