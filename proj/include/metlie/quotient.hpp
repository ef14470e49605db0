#pragma once

#include "metlie/integer.hpp"
#include "metlie/modlinear.hpp"
#include "metlie/monomial.hpp"
#include "metlie/poly.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace metlie {

/// Parameters of ℤ_{p,q,m}[X] = ℤ[X] / (m, x_i^p (x_i^q - 1)).
struct QuotientParams
{
	unsigned p = 1;
	unsigned q = 1;
	unsigned m = 2;
	int n = 1;

	void validate() const;
	friend bool operator==(QuotientParams const &, QuotientParams const &) = default;
};

class QPoly;

/// The finite ring ℤ_{p,q,m}[X]. Canonical monomials have every exponent
/// below p + q; elements are dense coefficient vectors over those monomials.
class QuotientRing : public std::enable_shared_from_this<QuotientRing>
{
  public:
	using Element = QPoly;

	static std::shared_ptr<QuotientRing const> make(QuotientParams const &params);

	QuotientParams const &params() const { return params_; }
	int n() const { return params_.n; }
	std::uint32_t modulus() const { return params_.m; }
	/// Number of canonical monomials, (p+q)^n.
	std::size_t dimension() const { return dim_; }
	/// |ℤ_{p,q,m}[X]| = m^((p+q)^n).
	Integer cardinality() const;
	double log2_cardinality() const;

	/// e if e < p+q, else p + ((e - p) mod q).
	unsigned reduce_exponent(unsigned e) const;
	Monomial reduce_monomial(Monomial const &m) const;
	/// Index of a canonical monomial (mixed radix, base p+q, x1 least significant).
	std::size_t index_of(Monomial const &canonical) const;
	Monomial const &monomial_at(std::size_t index) const { return monomials_[index]; }
	std::size_t product_index(std::size_t a, std::size_t b) const
	{
		return product_[a * dim_ + b];
	}
	std::size_t variable_index(int i) const { return variable_index_[i]; }

	// CommutativeRing interface (for evaluate()).
	QPoly zero() const;
	QPoly one() const;
	QPoly from_integer(Integer const &c) const;
	QPoly add(QPoly const &a, QPoly const &b) const;
	QPoly mul(QPoly const &a, QPoly const &b) const;

	/// The variable x_{i+1} as a ring element.
	QPoly variable(int i) const;

	// Raw dense kernels shared with the enumeration code: out += a * b (mod m).
	void mul_accumulate(std::span<std::uint32_t const> a, std::span<std::uint32_t const> b,
	                    std::span<std::uint32_t> out) const;

	explicit QuotientRing(QuotientParams const &params);

  private:
	QuotientParams params_;
	std::size_t dim_ = 0;
	std::vector<Monomial> monomials_;
	std::vector<std::uint32_t> product_;
	std::vector<std::size_t> variable_index_;
};

using QuotientRingPtr = std::shared_ptr<QuotientRing const>;

/// Element of ℤ_{p,q,m}[X] in canonical form: coefficient vector over the
/// canonical monomials with every entry in [0, m).
class QPoly
{
  public:
	QPoly() = default;
	explicit QPoly(QuotientRingPtr ring);
	QPoly(QuotientRingPtr ring, std::vector<std::uint32_t> coefficients);

	QuotientRing const &ring() const { return *ring_; }
	QuotientRingPtr const &ring_ptr() const { return ring_; }
	std::span<std::uint32_t const> coefficients() const { return c_; }
	std::span<std::uint32_t> coefficients() { return c_; }
	std::uint32_t coefficient(std::size_t index) const { return c_[index]; }

	/// Nonzero terms only, in canonical monomial index order.
	std::vector<std::pair<Monomial, std::uint32_t>> terms() const;
	bool is_zero() const;

	QPoly &operator+=(QPoly const &b);
	QPoly &operator-=(QPoly const &b);
	QPoly &operator*=(std::uint64_t c);
	friend QPoly operator+(QPoly a, QPoly const &b) { return a += b; }
	friend QPoly operator-(QPoly a, QPoly const &b) { return a -= b; }
	friend QPoly operator*(QPoly const &a, QPoly const &b);
	friend QPoly operator-(QPoly a);

	friend bool operator==(QPoly const &a, QPoly const &b);

  private:
	void check_ring(QPoly const &b) const;

	QuotientRingPtr ring_;
	std::vector<std::uint32_t> c_;
};

/// The natural homomorphism η: ℤ[X] -> ℤ_{p,q,m}[X].
QPoly reduce_pqm(Poly const &a, QuotientRingPtr const &ring);

/// Prints with the polynomial syntax (coefficients in [1, m-1]).
std::string format(QPoly const &a);

struct FiniteIdealLimits
{
	/// Refuse rings with more than 2^max_ring_log2 elements.
	double max_ring_log2 = 4096;
};

/// Is `target` in the ideal generated by `gens` in ℤ_{p,q,m}[X]?
///
/// The ideal is the additive subgroup spanned by {g·μ : g in gens,
/// μ canonical monomial}; membership is decided in that finite group.
bool ideal_contains_finite(std::span<QPoly const> gens, QPoly const &target,
                           FiniteIdealLimits const &limits = {});

} // namespace metlie
