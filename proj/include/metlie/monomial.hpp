#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace metlie {

/// Hard limit on the number of generators x1..xn.
inline constexpr int kMaxVars = 8;

/// Commutative monomial x1^e1 ... xn^en as a dense exponent vector.
/// Indices are 0-based internally; x_{i+1} is stored at index i.
class Monomial
{
  public:
	Monomial() = default;
	explicit Monomial(int n);

	static Monomial variable(int n, int i);

	int n() const { return n_; }
	unsigned operator[](int i) const { return e_[i]; }
	void set(int i, unsigned e);
	unsigned degree() const { return degree_; }
	bool is_one() const { return degree_ == 0; }

	/// Smallest index with a positive exponent, or -1 for the monomial 1.
	int min_variable() const;

	Monomial operator*(Monomial const &b) const;
	/// Requires divides(b, *this).
	Monomial operator/(Monomial const &b) const;
	bool divides(Monomial const &other) const;

	friend Monomial lcm(Monomial const &a, Monomial const &b);
	friend bool coprime(Monomial const &a, Monomial const &b);

	friend bool operator==(Monomial const &a, Monomial const &b)
	{
		return a.n_ == b.n_ && a.e_ == b.e_;
	}

	std::size_t hash() const;

  private:
	std::array<std::uint16_t, kMaxVars> e_{};
	std::uint8_t n_ = 0;
	std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic order with x1 < x2 < ... < xn.
/// This is the term order of every Poly and of the Gröbner engine.
bool grevlex_less(Monomial const &a, Monomial const &b);

/// Graded lexicographic order with x1 < x2 < ... < xn (printing order).
bool grlex_less(Monomial const &a, Monomial const &b);

struct MonomialHash
{
	std::size_t operator()(Monomial const &m) const { return m.hash(); }
};

struct GrevlexGreater
{
	bool operator()(Monomial const &a, Monomial const &b) const
	{
		return grevlex_less(b, a);
	}
};

} // namespace metlie
