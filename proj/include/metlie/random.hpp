#pragma once

#include "metlie/calculus.hpp"
#include "metlie/lie_expr.hpp"
#include "metlie/metlie.hpp"

#include <random>

namespace metlie {

/// Generators of random test inputs; deterministic for a given engine state.
class RandomInputs
{
  public:
	explicit RandomInputs(std::uint64_t seed) : rng_(seed) {}

	std::mt19937_64 &engine() { return rng_; }

	std::int64_t integer(std::int64_t lo, std::int64_t hi);

	/// Basis word [..[x_i1,x_i2]..x_ik] with 2 <= k <= max_length; requires n >= 2.
	RightNormedWord basis_word(int n, int max_length);

	/// Linear part and up to max_terms basis terms, coefficients in [-c, c].
	BasisExpansion basis_expansion(int n, int max_terms, int max_length, int c);
	MElement element(int n, int max_terms = 6, int max_length = 4, int c = 5);
	/// Element with zero linear part.
	MElement derived_element(int n, int max_terms = 3, int max_length = 3, int c = 3);

	LieExprPtr expr(int n, int depth, int c = 3);

	/// Up to `terms` monomials of total degree <= max_degree, coefficients in [-c, c].
	Poly poly(int n, int max_degree, int terms, int c);

	/// I + f·E_ij with i != j.
	PolyMatrix elementary_matrix(int n, int max_degree, int terms, int c);
	PolyMatrix elementary_product(int n, int factors, int max_degree = 1, int terms = 2, int c = 2);

	/// Images of x_1..x_n under a random endomorphism.
	std::vector<MElement> endomorphism(int n, int max_terms = 3, int max_length = 3, int c = 2);

	/// Product of elementary automorphisms: x_i -> x_i + c·x_j,
	/// x_i -> x_i + u(x_j, j != i) with u derived, and x -> x + [x, u] with u derived.
	std::vector<MElement> tame_automorphism(int n, int factors);

  private:
	std::mt19937_64 rng_;
};

/// Images of the composite x -> g(f(x)): endo_apply(f_i, g).
std::vector<MElement> compose(std::span<MElement const> f, std::span<MElement const> g);

std::vector<MElement> identity_images(int n);

} // namespace metlie
