#include "metlie/random.hpp"

#include <algorithm>
#include <map>

namespace metlie {

std::int64_t RandomInputs::integer(std::int64_t lo, std::int64_t hi)
{
	return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

RightNormedWord RandomInputs::basis_word(int n, int max_length)
{
	if (n < 2)
		throw DomainError("basis words need at least two generators");
	int len = static_cast<int>(integer(2, std::max(2, max_length)));
	int i2 = static_cast<int>(integer(1, n - 1));
	int i1 = static_cast<int>(integer(i2 + 1, n));
	RightNormedWord w{{i1, i2}};
	std::vector<int> rest;
	for (int t = 2; t < len; ++t)
		rest.push_back(static_cast<int>(integer(i2, n)));
	std::sort(rest.begin(), rest.end());
	w.indices.insert(w.indices.end(), rest.begin(), rest.end());
	return w;
}

BasisExpansion RandomInputs::basis_expansion(int n, int max_terms, int max_length, int c)
{
	BasisExpansion b;
	for (int i = 0; i < n; ++i)
		b.linear.push_back(integer(-c, c));
	if (n < 2)
		return b;
	std::map<std::vector<int>, Integer> acc;
	int terms = static_cast<int>(integer(0, max_terms));
	for (int t = 0; t < terms; ++t)
		acc[basis_word(n, max_length).indices] += integer(-c, c);
	for (auto const &[w, coeff] : acc)
		if (coeff != 0)
			b.terms.push_back({coeff, RightNormedWord{w}});
	std::sort(b.terms.begin(), b.terms.end(),
	          [](BasisTerm const &x, BasisTerm const &y) { return x.word < y.word; });
	return b;
}

MElement RandomInputs::element(int n, int max_terms, int max_length, int c)
{
	return from_basis(basis_expansion(n, max_terms, max_length, c), n);
}

MElement RandomInputs::derived_element(int n, int max_terms, int max_length, int c)
{
	auto b = basis_expansion(n, max_terms, max_length, c);
	std::fill(b.linear.begin(), b.linear.end(), Integer(0));
	return from_basis(b, n);
}

LieExprPtr RandomInputs::expr(int n, int depth, int c)
{
	auto leaf = [&] { return LieExpr::generator(static_cast<int>(integer(1, n))); };
	if (depth <= 0)
		return leaf();
	switch (integer(0, 4))
	{
	case 0: return leaf();
	case 1:
	case 2: return LieExpr::bracket(expr(n, depth - 1, c), expr(n, depth - 1, c));
	case 3:
	{
		std::vector<LieExprPtr> terms;
		int count = static_cast<int>(integer(1, 3));
		for (int t = 0; t < count; ++t)
			terms.push_back(expr(n, depth - 1, c));
		return LieExpr::sum(std::move(terms));
	}
	default:
	{
		std::int64_t k = 0;
		while (k == 0)
			k = integer(-c, c);
		return LieExpr::scalar(k, expr(n, depth - 1, c));
	}
	}
}

Poly RandomInputs::poly(int n, int max_degree, int terms, int c)
{
	std::vector<Poly::Term> ts;
	for (int t = 0; t < terms; ++t)
	{
		Monomial m(n);
		int deg = static_cast<int>(integer(0, max_degree));
		for (int d = 0; d < deg; ++d)
		{
			int v = static_cast<int>(integer(0, n - 1));
			m.set(v, m[v] + 1);
		}
		ts.emplace_back(m, Integer(static_cast<long>(integer(-c, c))));
	}
	return Poly::from_terms(n, std::move(ts));
}

PolyMatrix RandomInputs::elementary_matrix(int n, int max_degree, int terms, int c)
{
	auto a = PolyMatrix::identity(n, n);
	int i = static_cast<int>(integer(0, n - 1));
	int j = static_cast<int>(integer(0, n - 2));
	if (j >= i)
		++j;
	a(i, j) = poly(n, max_degree, terms, c);
	return a;
}

PolyMatrix RandomInputs::elementary_product(int n, int factors, int max_degree, int terms, int c)
{
	auto a = PolyMatrix::identity(n, n);
	for (int f = 0; f < factors; ++f)
		a = a * elementary_matrix(n, max_degree, terms, c);
	return a;
}

std::vector<MElement> RandomInputs::endomorphism(int n, int max_terms, int max_length, int c)
{
	std::vector<MElement> images;
	for (int i = 0; i < n; ++i)
		images.push_back(element(n, max_terms, max_length, c));
	return images;
}

std::vector<MElement> RandomInputs::tame_automorphism(int n, int factors)
{
	auto phi = identity_images(n);
	for (int f = 0; f < factors; ++f)
	{
		auto e = identity_images(n);
		int kind = n >= 2 ? static_cast<int>(integer(0, n >= 3 ? 2 : 1)) : -1;
		if (kind < 0)
		{
			e[0] = -e[0];
		}
		else if (kind == 0)
		{
			int i = static_cast<int>(integer(1, n));
			int j = static_cast<int>(integer(1, n - 1));
			if (j >= i)
				++j;
			e[i - 1] += Integer(static_cast<long>(integer(-2, 2))) * MElement::generator(j, n);
		}
		else if (kind == 1)
		{
			auto u = derived_element(n, 2, 3, 2);
			for (int i = 0; i < n; ++i)
				e[i] += bracket(e[i], u);
		}
		else
		{
			// derived element in the generators other than x_i, relabelled
			int i = static_cast<int>(integer(1, n));
			std::vector<int> others;
			for (int j = 1; j <= n; ++j)
				if (j != i)
					others.push_back(j);
			auto u = derived_element(n - 1, 2, 3, 2);
			std::vector<MElement> relabel;
			for (int j : others)
				relabel.push_back(MElement::generator(j, n));
			e[i - 1] += endo_apply(u, relabel);
		}
		phi = compose(e, phi);
	}
	return phi;
}

std::vector<MElement> compose(std::span<MElement const> f, std::span<MElement const> g)
{
	std::vector<MElement> out;
	for (auto const &fi : f)
		out.push_back(endo_apply(fi, g));
	return out;
}

std::vector<MElement> identity_images(int n)
{
	std::vector<MElement> out;
	for (int i = 1; i <= n; ++i)
		out.push_back(MElement::generator(i, n));
	return out;
}

} // namespace metlie
