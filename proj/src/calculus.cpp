#include "metlie/calculus.hpp"

#include <fmt/format.h>

#include <numeric>

namespace metlie {

PolyMatrix::PolyMatrix(int n, std::size_t rows, std::size_t cols)
    : n_(n), rows_(rows), cols_(cols), entries_(rows * cols, Poly(n))
{}

PolyMatrix PolyMatrix::identity(int n, std::size_t size)
{
	PolyMatrix m(n, size, size);
	for (std::size_t i = 0; i < size; ++i)
		m(i, i) = Poly::constant(n, 1);
	return m;
}

PolyMatrix PolyMatrix::submatrix(std::span<std::size_t const> rows,
                                 std::span<std::size_t const> cols) const
{
	PolyMatrix m(n_, rows.size(), cols.size());
	for (std::size_t r = 0; r < rows.size(); ++r)
		for (std::size_t c = 0; c < cols.size(); ++c)
			m(r, c) = (*this)(rows[r], cols[c]);
	return m;
}

PolyMatrix operator*(PolyMatrix const &a, PolyMatrix const &b)
{
	if (a.cols_ != b.rows_ || a.n_ != b.n_)
		throw DimensionError(fmt::format("cannot multiply {}x{} by {}x{}", a.rows_, a.cols_,
		                                 b.rows_, b.cols_));
	PolyMatrix r(a.n_, a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t j = 0; j < b.cols_; ++j)
			for (std::size_t t = 0; t < a.cols_; ++t)
				if (!a(i, t).is_zero() && !b(t, j).is_zero())
					r(i, j) += a(i, t) * b(t, j);
	return r;
}

PolyMatrix jacobi_matrix(std::span<MElement const> gs)
{
	if (gs.empty())
		throw DomainError("Jacobi matrix of an empty system");
	int n = gs[0].n;
	PolyMatrix m(n, n, gs.size());
	for (std::size_t j = 0; j < gs.size(); ++j)
	{
		if (gs[j].n != n)
			throw DimensionError("system elements over different generator counts");
		for (int i = 0; i < n; ++i)
			m(i, j) = gs[j].deriv[i];
	}
	return m;
}

PolyMatrix jacobi_substituted(std::span<MElement const> gs, std::span<Poly const> fs)
{
	auto j = jacobi_matrix(gs);
	if (static_cast<int>(fs.size()) != j.n())
		throw DimensionError("substitution length differs from generator count");
	int target_n = fs[0].n();
	PolyRing ring{target_n};
	PolyMatrix r(target_n, j.rows(), j.cols());
	for (std::size_t a = 0; a < j.rows(); ++a)
		for (std::size_t b = 0; b < j.cols(); ++b)
			r(a, b) = evaluate(j(a, b), fs, ring);
	return r;
}

PolyMatrix jacobi_substituted(std::span<MElement const> gs, std::span<MElement const> fs)
{
	std::vector<Poly> linear;
	for (auto const &f : fs)
		linear.push_back(f.linear_poly());
	return jacobi_substituted(gs, std::span<Poly const>(linear));
}

Poly sigma(PolyMatrix const &a, std::size_t i)
{
	if (!a.is_square())
		throw DimensionError("sigma needs a square matrix");
	if (i < 1 || i > a.cols())
		throw DomainError(fmt::format("sigma index {} outside 1..{}", i, a.cols()));
	if (static_cast<std::size_t>(a.n()) < a.rows())
		throw DimensionError("sigma needs at least as many generators as rows");
	Poly s(a.n());
	for (std::size_t j = 0; j < a.rows(); ++j)
		s += a(j, i - 1).mul_term(1, Monomial::variable(a.n(), static_cast<int>(j)));
	return s;
}

namespace {

bool next_combination(std::vector<std::size_t> &c, std::size_t n)
{
	std::size_t k = c.size();
	for (std::size_t i = k; i-- > 0;)
		if (c[i] < n - k + i)
		{
			++c[i];
			for (std::size_t j = i + 1; j < k; ++j)
				c[j] = c[j - 1] + 1;
			return true;
		}
	return false;
}

} // namespace

std::vector<Poly> minors(PolyMatrix const &a, std::size_t k)
{
	if (k < 1 || k > std::min(a.rows(), a.cols()))
		throw DomainError(fmt::format("minor order {} outside 1..{}", k,
		                              std::min(a.rows(), a.cols())));
	std::vector<Poly> out;
	std::vector<std::size_t> rows(k);
	std::iota(rows.begin(), rows.end(), 0);
	do
	{
		std::vector<std::size_t> cols(k);
		std::iota(cols.begin(), cols.end(), 0);
		do
			out.push_back(det(a.submatrix(rows, cols)));
		while (next_combination(cols, a.cols()));
	} while (next_combination(rows, a.rows()));
	return out;
}

Poly det_cofactor(PolyMatrix const &a)
{
	if (!a.is_square())
		throw DimensionError("determinant of a non-square matrix");
	std::size_t size = a.rows();
	if (size == 0)
		return Poly::constant(a.n(), 1);
	if (size == 1)
		return a(0, 0);
	if (size == 2)
		return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
	Poly acc(a.n());
	std::vector<std::size_t> rows(size - 1);
	std::iota(rows.begin(), rows.end(), 1);
	for (std::size_t c = 0; c < size; ++c)
	{
		if (a(0, c).is_zero())
			continue;
		std::vector<std::size_t> cols;
		for (std::size_t j = 0; j < size; ++j)
			if (j != c)
				cols.push_back(j);
		Poly term = a(0, c) * det_cofactor(a.submatrix(rows, cols));
		if (c % 2 == 0)
			acc += term;
		else
			acc -= term;
	}
	return acc;
}

Poly det_bareiss(PolyMatrix const &a)
{
	if (!a.is_square())
		throw DimensionError("determinant of a non-square matrix");
	std::size_t size = a.rows();
	if (size == 0)
		return Poly::constant(a.n(), 1);
	PolyMatrix m = a;
	Poly prev = Poly::constant(a.n(), 1);
	bool negate = false;
	for (std::size_t k = 0; k + 1 < size; ++k)
	{
		if (m(k, k).is_zero())
		{
			std::size_t swap = k + 1;
			while (swap < size && m(swap, k).is_zero())
				++swap;
			if (swap == size)
				return Poly(a.n());
			for (std::size_t c = 0; c < size; ++c)
				std::swap(m(k, c), m(swap, c));
			negate = !negate;
		}
		for (std::size_t i = k + 1; i < size; ++i)
		{
			for (std::size_t j = k + 1; j < size; ++j)
				m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
			m(i, k) = Poly(a.n());
		}
		prev = m(k, k);
	}
	Poly d = m(size - 1, size - 1);
	return negate ? -d : d;
}

Poly det(PolyMatrix const &a)
{
	if (a.rows() <= 4)
		return det_cofactor(a);
	return det_bareiss(a);
}

Integer det_integer(std::vector<std::vector<Integer>> m)
{
	std::size_t size = m.size();
	for (auto const &row : m)
		if (row.size() != size)
			throw DimensionError("determinant of a non-square matrix");
	if (size == 0)
		return 1;
	Integer prev = 1;
	bool negate = false;
	for (std::size_t k = 0; k + 1 < size; ++k)
	{
		if (m[k][k] == 0)
		{
			std::size_t swap = k + 1;
			while (swap < size && m[swap][k] == 0)
				++swap;
			if (swap == size)
				return 0;
			std::swap(m[k], m[swap]);
			negate = !negate;
		}
		for (std::size_t i = k + 1; i < size; ++i)
		{
			for (std::size_t j = k + 1; j < size; ++j)
			{
				Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
				mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
				m[i][j] = t;
			}
			m[i][k] = 0;
		}
		prev = m[k][k];
	}
	return negate ? Integer(-m[size - 1][size - 1]) : m[size - 1][size - 1];
}

} // namespace metlie
