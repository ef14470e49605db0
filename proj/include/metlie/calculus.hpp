#pragma once

#include "metlie/metlie.hpp"
#include "metlie/poly.hpp"

#include <span>
#include <vector>

namespace metlie {

/// Dense matrix over ℤ[x1..xn], row-major.
class PolyMatrix
{
  public:
	PolyMatrix() = default;
	PolyMatrix(int n, std::size_t rows, std::size_t cols);

	static PolyMatrix identity(int n, std::size_t size);

	int n() const { return n_; }
	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }

	Poly &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
	Poly const &operator()(std::size_t r, std::size_t c) const
	{
		return entries_[r * cols_ + c];
	}

	PolyMatrix submatrix(std::span<std::size_t const> rows,
	                     std::span<std::size_t const> cols) const;

	friend PolyMatrix operator*(PolyMatrix const &a, PolyMatrix const &b);
	friend bool operator==(PolyMatrix const &, PolyMatrix const &) = default;

  private:
	int n_ = 0;
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Poly> entries_;
};

/// n×k matrix whose column j is the derivative vector of gs[j].
PolyMatrix jacobi_matrix(std::span<MElement const> gs);

/// 𝒥 with every entry evaluated at x_i -> fs[i-1].
PolyMatrix jacobi_substituted(std::span<MElement const> gs, std::span<Poly const> fs);
/// Same, substituting the linear parts of the given elements.
PolyMatrix jacobi_substituted(std::span<MElement const> gs, std::span<MElement const> fs);

/// σ_i(A) = Σ_j x_j·A[j][i] for a square matrix, i 1-based.
Poly sigma(PolyMatrix const &a, std::size_t i);

/// All k×k minors, ordered lexicographically by (row tuple, column tuple).
std::vector<Poly> minors(PolyMatrix const &a, std::size_t k);

/// Cofactor expansion for size <= 4, fraction-free elimination above.
Poly det(PolyMatrix const &a);
Poly det_cofactor(PolyMatrix const &a);
Poly det_bareiss(PolyMatrix const &a);

/// Exact determinant of an integer matrix (Bareiss).
Integer det_integer(std::vector<std::vector<Integer>> a);

} // namespace metlie
