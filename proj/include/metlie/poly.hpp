#pragma once

#include "metlie/errors.hpp"
#include "metlie/integer.hpp"
#include "metlie/monomial.hpp"

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metlie {

/// Sparse polynomial in ℤ[x1..xn]. Terms are kept sorted by decreasing
/// grevlex order and never carry a zero coefficient.
class Poly
{
  public:
	using Term = std::pair<Monomial, Integer>;

	Poly() = default;
	explicit Poly(int n) : n_(n) {}

	static Poly constant(int n, Integer const &c);
	/// The variable x_{i+1} (0-based index).
	static Poly variable(int n, int i);
	static Poly term(Integer const &c, Monomial const &m);
	/// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
	static Poly from_terms(int n, std::vector<Term> terms);

	int n() const { return n_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	std::span<Term const> terms() const { return terms_; }

	Term const &leading_term() const { return terms_.front(); }
	Monomial const &leading_monomial() const { return terms_.front().first; }
	Integer const &leading_coefficient() const { return terms_.front().second; }

	unsigned total_degree() const;
	Integer constant_term() const;
	bool is_constant() const;
	Integer coefficient(Monomial const &m) const;
	/// gcd of all coefficients (0 for the zero polynomial).
	Integer content() const;

	Poly &operator+=(Poly const &b);
	Poly &operator-=(Poly const &b);
	Poly &operator*=(Poly const &b);
	Poly &operator*=(Integer const &c);

	/// c * m * this
	Poly mul_term(Integer const &c, Monomial const &m) const;

	friend Poly operator+(Poly a, Poly const &b) { return a += b; }
	friend Poly operator-(Poly a, Poly const &b) { return a -= b; }
	friend Poly operator*(Poly const &a, Poly const &b);
	friend Poly operator*(Integer const &c, Poly a) { return a *= c; }
	friend Poly operator-(Poly a);

	friend bool operator==(Poly const &a, Poly const &b)
	{
		return a.n_ == b.n_ && a.terms_ == b.terms_;
	}

  private:
	void check_same_n(Poly const &b) const;
	Poly combine(Poly const &b, bool subtract) const;

	int n_ = 0;
	std::vector<Term> terms_;
};

/// Exact quotient a / b in ℤ[X]; throws DomainError if b does not divide a.
Poly exact_divide(Poly const &a, Poly const &b);

Poly pow(Poly const &a, unsigned e);

/// Graded lexicographic (x1 < ... < xn), highest term first:
/// "x1^2*x2 - 3*x2 + 1". Zero prints as "0".
std::string format(Poly const &p);

/// Parses the textual polynomial syntax: integers, x1..xn, '+', '-', '*',
/// '^' with non-negative integer exponents, and parentheses.
Poly parse_poly(std::string_view text, int n);

// ---------------------------------------------------------------------------
// Substitution homomorphisms ℤ[X] -> target commutative ring.

template <class R>
concept CommutativeRing = requires(R const &r, typename R::Element const &a,
                                   Integer const &c) {
	{ r.zero() } -> std::convertible_to<typename R::Element>;
	{ r.one() } -> std::convertible_to<typename R::Element>;
	{ r.from_integer(c) } -> std::convertible_to<typename R::Element>;
	{ r.add(a, a) } -> std::convertible_to<typename R::Element>;
	{ r.mul(a, a) } -> std::convertible_to<typename R::Element>;
};

struct IntegerRing
{
	using Element = Integer;
	Element zero() const { return 0; }
	Element one() const { return 1; }
	Element from_integer(Integer const &c) const { return c; }
	Element add(Element const &a, Element const &b) const { return a + b; }
	Element mul(Element const &a, Element const &b) const { return a * b; }
};

/// ℤ_m with residues in [0, m).
struct ModularRing
{
	using Element = std::uint64_t;
	std::uint64_t m;

	Element zero() const { return 0; }
	Element one() const { return 1 % m; }
	Element from_integer(Integer const &c) const { return mod_u64(c, m); }
	Element add(Element a, Element b) const { return (a + b) % m; }
	Element mul(Element a, Element b) const
	{
		return static_cast<Element>((unsigned __int128)a * b % m);
	}
};

struct PolyRing
{
	using Element = Poly;
	int n;

	Element zero() const { return Poly(n); }
	Element one() const { return Poly::constant(n, 1); }
	Element from_integer(Integer const &c) const { return Poly::constant(n, c); }
	Element add(Element const &a, Element const &b) const { return a + b; }
	Element mul(Element const &a, Element const &b) const { return a * b; }
};

/// Substitutes images[i] for x_{i+1} and evaluates in the target ring.
template <CommutativeRing R>
typename R::Element evaluate(Poly const &a,
                             std::span<typename R::Element const> images,
                             R const &ring)
{
	using E = typename R::Element;
	if (static_cast<int>(images.size()) != a.n())
		throw DimensionError("evaluate: image count differs from generator count");

	// powers[i][e] = images[i]^e, grown on demand
	std::vector<std::vector<E>> powers(images.size());
	auto power = [&](int i, unsigned e) -> E const & {
		auto &row = powers[i];
		if (row.empty())
			row.push_back(ring.one());
		while (row.size() <= e)
			row.push_back(ring.mul(row.back(), images[i]));
		return row[e];
	};

	E acc = ring.zero();
	for (auto const &[mono, coeff] : a.terms())
	{
		E t = ring.from_integer(coeff);
		for (int i = 0; i < a.n(); ++i)
			if (mono[i] != 0)
				t = ring.mul(t, power(i, mono[i]));
		acc = ring.add(acc, t);
	}
	return acc;
}

/// Augmentation ε: ℤ[X] -> ℤ, the free term.
inline Integer augmentation(Poly const &a) { return a.constant_term(); }

} // namespace metlie
