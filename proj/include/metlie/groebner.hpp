#pragma once

#include "metlie/poly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace metlie {

struct GroebnerLimits
{
	std::size_t max_basis_size = 10000;
	unsigned max_degree = 40;
	/// Carry cofactors expressing each basis element in the input generators.
	bool track_cofactors = false;
};

struct GroebnerStats
{
	std::size_t pairs_processed = 0;
	std::size_t reductions_to_zero = 0;
	std::size_t max_basis_size = 0;
};

/// Strong Gröbner basis over ℤ for grevlex with x1 < ... < xn.
///
/// Every nonzero ideal element has a leading term c·x^a such that some
/// basis element has leading term d·x^b with x^b | x^a and d | c.
class GroebnerBasis
{
  public:
	GroebnerBasis() = default;
	GroebnerBasis(int n, std::vector<Poly> elements) : n_(n), elements_(std::move(elements))
	{}

	int n() const { return n_; }
	std::span<Poly const> elements() const { return elements_; }
	bool is_unit_ideal() const;

	/// Remainder after exhaustive reduction (leading coefficients reduced
	/// with non-negative remainders).
	Poly normal_form(Poly const &f) const;
	bool contains(Poly const &f) const { return normal_form(f).is_zero(); }

	GroebnerStats const &stats() const { return stats_; }
	GroebnerStats &stats() { return stats_; }

  private:
	int n_ = 0;
	std::vector<Poly> elements_;
	GroebnerStats stats_;
};

/// Buchberger completion with S- and G-polynomials. Throws BudgetExceeded
/// when a cap is hit. The result is minimal and tail-reduced; a unit ideal
/// yields the basis {1}.
GroebnerBasis groebner_z(std::span<Poly const> gens, GroebnerLimits const &limits = {});

/// 1 = Σ cofactors[i]·gens[i].
struct UnitCertificate
{
	std::vector<Poly> cofactors;

	/// Recomputes the combination exactly.
	bool verify(std::span<Poly const> gens) const;
};

enum class Membership
{
	yes,
	no,
	inconclusive
};

struct UnitIdealResult
{
	Membership answer = Membership::inconclusive;
	std::optional<UnitCertificate> certificate;
	std::size_t basis_size = 0;
	std::string note;
};

/// Decides 1 ∈ (gens) over ℤ[X]; a yes answer always carries a verified certificate.
UnitIdealResult ideal_contains_one(std::span<Poly const> gens, GroebnerLimits limits = {});

/// Independent check of the strong Gröbner property: every S- and
/// G-polynomial of a pair reduces to zero.
bool is_strong_groebner(std::span<Poly const> basis);

} // namespace metlie
