#include "metlie/metlie.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace metlie {

namespace {

void check_n(int n)
{
	if (n < 1 || n > kMaxVars)
		throw DomainError(fmt::format("generator count {} outside 1..{}", n, kMaxVars));
}

void check_same(MElement const &a, MElement const &b)
{
	if (a.n != b.n)
		throw DimensionError(
		    fmt::format("metabelian elements over {} and {} generators", a.n, b.n));
}

Monomial word_tail(RightNormedWord const &w, int n, std::size_t skip)
{
	Monomial m(n);
	for (std::size_t j = 1; j < w.indices.size(); ++j)
		if (j != skip)
		{
			int v = w.indices[j] - 1;
			m.set(v, m[v] + 1);
		}
	return m;
}

} // namespace

MElement::MElement(int generators) : n(generators), linear(generators, 0)
{
	check_n(generators);
	deriv.assign(generators, Poly(generators));
}

MElement MElement::generator(int i, int n)
{
	check_n(n);
	if (i < 1 || i > n)
		throw DomainError(fmt::format("generator x{} outside x1..x{}", i, n));
	MElement g(n);
	g.linear[i - 1] = 1;
	g.deriv[i - 1] = Poly::constant(n, 1);
	return g;
}

bool MElement::is_zero() const
{
	return std::all_of(linear.begin(), linear.end(), [](auto const &c) { return c == 0; }) &&
	       std::all_of(deriv.begin(), deriv.end(), [](auto const &d) { return d.is_zero(); });
}

Poly MElement::linear_poly() const
{
	std::vector<Poly::Term> terms;
	for (int i = 0; i < n; ++i)
		if (linear[i] != 0)
			terms.emplace_back(Monomial::variable(n, i), linear[i]);
	return Poly::from_terms(n, std::move(terms));
}

bool MElement::satisfies_fundamental_identity() const
{
	Poly sum(n);
	for (int i = 0; i < n; ++i)
		sum += deriv[i].mul_term(1, Monomial::variable(n, i));
	return sum == linear_poly();
}

MElement &MElement::operator+=(MElement const &b)
{
	check_same(*this, b);
	for (int i = 0; i < n; ++i)
	{
		linear[i] += b.linear[i];
		deriv[i] += b.deriv[i];
	}
	return *this;
}

MElement &MElement::operator-=(MElement const &b)
{
	check_same(*this, b);
	for (int i = 0; i < n; ++i)
	{
		linear[i] -= b.linear[i];
		deriv[i] -= b.deriv[i];
	}
	return *this;
}

MElement &MElement::operator*=(Integer const &c)
{
	for (int i = 0; i < n; ++i)
	{
		linear[i] *= c;
		deriv[i] *= c;
	}
	return *this;
}

MElement bracket(MElement const &a, MElement const &b)
{
	check_same(a, b);
	MElement r(a.n);
	Poly la = a.linear_poly();
	Poly lb = b.linear_poly();
	if (la.is_zero() && lb.is_zero())
		return r;
	for (int i = 0; i < a.n; ++i)
		r.deriv[i] = a.deriv[i] * lb - b.deriv[i] * la;
	return r;
}

MElement from_expr(LieExpr const &e, int n)
{
	check_n(n);
	std::vector<MElement> gens;
	for (int i = 1; i <= n; ++i)
		gens.push_back(MElement::generator(i, n));
	return eval_in_ring(e, std::span<MElement const>(gens), MetabelianRing{n});
}

MElement parse_element(std::string_view text, int n)
{
	return from_expr(*parse_lie(text, n), n);
}

// ---------------------------------------------------------------------------

bool RightNormedWord::is_basis() const
{
	if (indices.size() < 2)
		return false;
	if (!(indices[1] < indices[0]))
		return false;
	for (std::size_t j = 2; j < indices.size(); ++j)
		if (indices[j] < indices[j - 1])
			return false;
	return true;
}

bool operator<(RightNormedWord const &a, RightNormedWord const &b)
{
	if (a.indices.size() != b.indices.size())
		return a.indices.size() < b.indices.size();
	return a.indices < b.indices;
}

std::vector<Poly> word_derivatives(RightNormedWord const &w, int n)
{
	if (w.indices.size() < 2)
		throw DomainError("a right-normed word has at least two letters");
	for (int idx : w.indices)
		if (idx < 1 || idx > n)
			throw DomainError(fmt::format("generator x{} outside x1..x{}", idx, n));
	std::vector<Poly> d(n, Poly(n));
	int i1 = w.indices[0] - 1, i2 = w.indices[1] - 1;
	d[i1] += Poly::term(1, word_tail(w, n, 0));
	// x_{i1} times the letters after position 2
	Monomial rest = word_tail(w, n, 1) * Monomial::variable(n, i1);
	d[i2] -= Poly::term(1, rest);
	return d;
}

BasisExpansion to_basis(MElement const &a)
{
	int const n = a.n;
	BasisExpansion out;
	out.linear = a.linear;
	std::vector<BasisTerm> terms;
	for (int i = 0; i < n; ++i)
		for (auto const &[mono, c] : a.deriv[i].terms())
		{
			int j = mono.min_variable();
			if (j < 0 || j >= i)
				continue;
			RightNormedWord w;
			w.indices = {i + 1, j + 1};
			Monomial rest = mono / Monomial::variable(n, j);
			for (int v = 0; v < n; ++v)
				for (unsigned e = 0; e < rest[v]; ++e)
					w.indices.push_back(v + 1);
			terms.push_back({c, std::move(w)});
		}
	std::sort(terms.begin(), terms.end(),
	          [](auto const &x, auto const &y) { return x.word < y.word; });
	out.terms = std::move(terms);

	if (!(from_basis(out, n) == a))
		throw DomainError("derivative data does not come from an element of the free "
		                  "metabelian Lie ring");
	return out;
}

MElement from_basis(BasisExpansion const &b, int n)
{
	check_n(n);
	if (static_cast<int>(b.linear.size()) != n)
		throw DimensionError("linear part has the wrong length");
	std::vector<std::vector<Poly::Term>> acc(n);
	for (int i = 0; i < n; ++i)
		if (b.linear[i] != 0)
			acc[i].emplace_back(Monomial(n), b.linear[i]);
	for (auto const &t : b.terms)
	{
		if (!t.word.is_basis())
			throw DomainError(fmt::format("{} is not a basis word", format(t.word)));
		auto const &w = t.word;
		for (int idx : w.indices)
			if (idx < 1 || idx > n)
				throw DomainError(fmt::format("generator x{} outside x1..x{}", idx, n));
		acc[w.indices[0] - 1].emplace_back(word_tail(w, n, 0), t.coefficient);
		acc[w.indices[1] - 1].emplace_back(
		    word_tail(w, n, 1) * Monomial::variable(n, w.indices[0] - 1), -t.coefficient);
	}
	MElement r(n);
	r.linear = b.linear;
	for (int i = 0; i < n; ++i)
		r.deriv[i] = Poly::from_terms(n, std::move(acc[i]));
	return r;
}

MElement endo_apply(MElement const &g, std::span<MElement const> images)
{
	if (static_cast<int>(images.size()) != g.n)
		throw DimensionError("endo_apply: image count differs from generator count");
	int target_n = images.empty() ? g.n : images[0].n;
	return eval_element(g, images, MetabelianRing{target_n});
}

MElement endo_apply(LieExpr const &g, std::span<MElement const> images)
{
	if (images.empty())
		throw DimensionError("endo_apply: empty substitution");
	if (g.max_generator() > static_cast<int>(images.size()))
		throw DomainError("expression uses a generator outside the substitution");
	return eval_in_ring(g, images, MetabelianRing{images[0].n});
}

std::string format(RightNormedWord const &w)
{
	if (w.indices.empty())
		return "";
	std::string s = fmt::format("x{}", w.indices[0]);
	for (std::size_t j = 1; j < w.indices.size(); ++j)
		s = fmt::format("[{},x{}]", s, w.indices[j]);
	return s;
}

std::string format(MElement const &a)
{
	auto basis = to_basis(a);
	std::vector<std::pair<Integer, std::string>> parts;
	for (int i = 0; i < a.n; ++i)
		if (basis.linear[i] != 0)
			parts.emplace_back(basis.linear[i], fmt::format("x{}", i + 1));
	for (auto const &t : basis.terms)
		parts.emplace_back(t.coefficient, format(t.word));
	if (parts.empty())
		return "0";
	std::string s;
	bool first = true;
	for (auto const &[c, body] : parts)
	{
		bool negative = c < 0;
		Integer abs = negative ? Integer(-c) : c;
		if (first)
			s += negative ? "-" : "";
		else
			s += negative ? " - " : " + ";
		if (abs != 1)
			s += abs.get_str() + "*";
		s += body;
		first = false;
	}
	return s;
}

} // namespace metlie
