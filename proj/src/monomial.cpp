#include "metlie/monomial.hpp"
#include "metlie/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>

namespace metlie {

Monomial::Monomial(int n) : n_(static_cast<std::uint8_t>(n))
{
	if (n < 0 || n > kMaxVars)
		throw DomainError(
		    fmt::format("generator count {} outside 0..{}", n, kMaxVars));
}

Monomial Monomial::variable(int n, int i)
{
	Monomial m(n);
	m.set(i, 1);
	return m;
}

void Monomial::set(int i, unsigned e)
{
	if (i < 0 || i >= n_)
		throw DomainError(fmt::format("variable index {} outside 0..{}", i, n_ - 1));
	if (e > std::numeric_limits<std::uint16_t>::max())
		throw DomainError("exponent overflow");
	degree_ = degree_ - e_[i] + e;
	e_[i] = static_cast<std::uint16_t>(e);
}

int Monomial::min_variable() const
{
	for (int i = 0; i < n_; ++i)
		if (e_[i] != 0)
			return i;
	return -1;
}

Monomial Monomial::operator*(Monomial const &b) const
{
	if (n_ != b.n_)
		throw DimensionError("monomials over different generator counts");
	Monomial r(n_);
	for (int i = 0; i < n_; ++i)
		r.set(i, unsigned(e_[i]) + b.e_[i]);
	return r;
}

Monomial Monomial::operator/(Monomial const &b) const
{
	Monomial r(n_);
	for (int i = 0; i < n_; ++i)
	{
		if (b.e_[i] > e_[i])
			throw DomainError("monomial does not divide");
		r.set(i, unsigned(e_[i]) - b.e_[i]);
	}
	return r;
}

bool Monomial::divides(Monomial const &other) const
{
	if (degree_ > other.degree_)
		return false;
	for (int i = 0; i < n_; ++i)
		if (e_[i] > other.e_[i])
			return false;
	return true;
}

Monomial lcm(Monomial const &a, Monomial const &b)
{
	Monomial r(a.n_);
	for (int i = 0; i < a.n_; ++i)
		r.set(i, std::max(a.e_[i], b.e_[i]));
	return r;
}

bool coprime(Monomial const &a, Monomial const &b)
{
	for (int i = 0; i < a.n_; ++i)
		if (a.e_[i] != 0 && b.e_[i] != 0)
			return false;
	return true;
}

std::size_t Monomial::hash() const
{
	std::size_t h = n_;
	for (int i = 0; i < n_; ++i)
		h = h * 1000003u ^ e_[i];
	return h;
}

bool grevlex_less(Monomial const &a, Monomial const &b)
{
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	for (int i = 0; i < a.n(); ++i)
		if (a[i] != b[i])
			return a[i] > b[i];
	return false;
}

bool grlex_less(Monomial const &a, Monomial const &b)
{
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	for (int i = a.n() - 1; i >= 0; --i)
		if (a[i] != b[i])
			return a[i] < b[i];
	return false;
}

} // namespace metlie
