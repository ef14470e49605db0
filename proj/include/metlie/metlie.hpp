#pragma once

#include "metlie/lie_expr.hpp"
#include "metlie/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace metlie {

/// Element g of the free metabelian Lie ring M on x1..xn, stored as its
/// linear part ḡ (integer coefficients of x1..xn) and its derivative vector
/// (∂_1 g, ..., ∂_n g) in ℤ[X]. The pair determines g uniquely.
///
/// Invariant: Σ_i x_i·deriv[i] equals the linear polynomial Σ_i linear[i]·x_i.
struct MElement
{
	int n = 0;
	std::vector<Integer> linear;
	std::vector<Poly> deriv;

	MElement() = default;
	explicit MElement(int generators);

	static MElement zero(int n) { return MElement(n); }
	/// The generator x_i, 1 <= i <= n.
	static MElement generator(int i, int n);

	bool is_zero() const;
	/// ḡ = Σ linear[i]·x_i as a polynomial.
	Poly linear_poly() const;
	/// Checks the invariant exactly.
	bool satisfies_fundamental_identity() const;

	MElement &operator+=(MElement const &b);
	MElement &operator-=(MElement const &b);
	MElement &operator*=(Integer const &c);

	friend MElement operator+(MElement a, MElement const &b) { return a += b; }
	friend MElement operator-(MElement a, MElement const &b) { return a -= b; }
	friend MElement operator-(MElement a) { return a *= -1; }
	friend MElement operator*(Integer const &c, MElement a) { return a *= c; }

	friend bool operator==(MElement const &a, MElement const &b)
	{
		return a.n == b.n && a.linear == b.linear && a.deriv == b.deriv;
	}
};

/// [a, b]: zero linear part, ∂_i[a,b] = ∂_i a·b̄ - ∂_i b·ā.
MElement bracket(MElement const &a, MElement const &b);

/// The image of a Lie polynomial in M.
MElement from_expr(LieExpr const &e, int n);

/// Parses and maps to M in one step.
MElement parse_element(std::string_view text, int n);

/// M as a target for eval_in_ring.
struct MetabelianRing
{
	using Element = MElement;
	int n;

	Element zero() const { return MElement(n); }
	Element add(Element const &a, Element const &b) const { return a + b; }
	Element neg(Element const &a) const { return -a; }
	Element scale(Integer const &c, Element const &a) const { return c * a; }
	Element bracket(Element const &a, Element const &b) const
	{
		return metlie::bracket(a, b);
	}
};

// ---------------------------------------------------------------------------
// Right-normed basis of the derived subring M'.

/// [..[[x_i1, x_i2], x_i3] .. x_ik], indices 1-based, k >= 2.
struct RightNormedWord
{
	std::vector<int> indices;

	/// i2 < i1 and i2 <= i3 <= ... <= ik.
	bool is_basis() const;

	/// Order used for printing: (length, i1, i2, remaining indices).
	friend bool operator<(RightNormedWord const &a, RightNormedWord const &b);
	friend bool operator==(RightNormedWord const &, RightNormedWord const &) = default;
};

struct BasisTerm
{
	Integer coefficient;
	RightNormedWord word;

	friend bool operator==(BasisTerm const &, BasisTerm const &) = default;
};

/// g = Σ linear[i]·x_i + Σ coefficient·word.
struct BasisExpansion
{
	std::vector<Integer> linear;
	std::vector<BasisTerm> terms; // sorted by word, no zero coefficients

	friend bool operator==(BasisExpansion const &, BasisExpansion const &) = default;
};

/// Derivative vector of a single right-normed word (any word, not only basis ones).
std::vector<Poly> word_derivatives(RightNormedWord const &w, int n);

/// Throws DomainError if the derivative data is not that of an element of M.
BasisExpansion to_basis(MElement const &a);

/// Throws DomainError on words violating the basis constraints.
MElement from_basis(BasisExpansion const &b, int n);

/// The image of g under the endomorphism x_i -> images[i-1].
MElement endo_apply(MElement const &g, std::span<MElement const> images);
MElement endo_apply(LieExpr const &g, std::span<MElement const> images);

/// Linear part first (ascending index), then basis terms in word order:
/// "2*x1 - [[x2,x1],x3]". Zero prints as "0".
std::string format(MElement const &a);
std::string format(RightNormedWord const &w);

/// Evaluates g in any Lie ring through its basis expansion.
template <LieRing R>
typename R::Element eval_element(MElement const &g,
                                 std::span<typename R::Element const> images,
                                 R const &ring)
{
	if (static_cast<int>(images.size()) != g.n)
		throw DimensionError("eval_element: image count differs from generator count");
	auto basis = to_basis(g);
	auto acc = ring.zero();
	for (int i = 0; i < g.n; ++i)
		if (basis.linear[i] != 0)
			acc = ring.add(acc, ring.scale(basis.linear[i], images[i]));
	for (auto const &t : basis.terms)
	{
		auto const &idx = t.word.indices;
		auto w = ring.bracket(images[idx[0] - 1], images[idx[1] - 1]);
		for (std::size_t j = 2; j < idx.size(); ++j)
			w = ring.bracket(w, images[idx[j] - 1]);
		acc = ring.add(acc, ring.scale(t.coefficient, w));
	}
	return acc;
}

} // namespace metlie
