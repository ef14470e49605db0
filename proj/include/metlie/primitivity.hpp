#pragma once

#include "metlie/calculus.hpp"
#include "metlie/groebner.hpp"
#include "metlie/metlie.hpp"
#include "metlie/quotient.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace metlie {

enum class Verdict
{
	primitive,
	not_primitive,
	inconclusive
};

enum class DecisionMethod
{
	groebner,
	abelian_refuted,
	quotient_refuted
};

std::string to_string(Verdict v);
std::string to_string(DecisionMethod m);

/// A point of F_p^n where every given polynomial vanishes.
struct VanishingPoint
{
	std::uint64_t prime = 0;
	std::vector<std::uint64_t> values;
};

/// Why a system is not primitive.
struct Refutation
{
	enum class Kind
	{
		abelian,    // abelianization has a nontrivial invariant factor
		quotient,   // minors generate a proper ideal of a finite quotient
		evaluation  // minors share a zero over a prime field
	};
	Kind kind = Kind::abelian;
	/// abelian: the gcd of the linear minors and a modulus m dividing it.
	Integer minor_gcd;
	std::uint64_t modulus = 0;
	/// quotient: the offending ring.
	std::optional<QuotientParams> params;
	/// optional common zero of the minors.
	std::optional<VanishingPoint> point;
};

std::string to_string(Refutation::Kind k);

struct PrimitivityVerdict
{
	Verdict verdict = Verdict::inconclusive;
	DecisionMethod method = DecisionMethod::groebner;
	std::size_t k = 0;
	std::vector<Poly> minors;
	std::optional<UnitCertificate> certificate; // 1 = Σ cofactors[i]·minors[i]
	std::optional<Refutation> refutation;
	std::string note;
};

struct PrimitivityOptions
{
	GroebnerLimits groebner;
	/// Quotients tried before the Gröbner computation.
	std::vector<QuotientParams> quotient_grid; // n is filled in per call
	FiniteIdealLimits finite;
	bool search_vanishing_point = true;
	std::uint64_t max_point_prime = 13;

	/// The default grid {1,2} x {1,2} x {2,3}.
	static PrimitivityOptions defaults();
};

/// k×k integer minors of a k×n matrix of linear parts, gcd taken.
Integer abelian_minor_gcd(std::span<std::vector<Integer> const> rows);
bool abelian_primitive(std::span<std::vector<Integer> const> rows);

/// Linear parts of a system as rows of a k×n integer matrix.
std::vector<std::vector<Integer>> linear_parts(std::span<MElement const> gs);

/// 1 lies in the ideal of ℤ_{p,q,m}[X] generated by the reduced k×k minors.
bool quotient_primitivity_check(std::span<MElement const> gs, QuotientParams params,
                                FiniteIdealLimits const &limits = {});

/// Full decision procedure: abelian test, quotient grid, then Gröbner over ℤ.
PrimitivityVerdict is_primitive(std::span<MElement const> gs,
                                PrimitivityOptions const &options = PrimitivityOptions::defaults());

/// n elements with det 𝒥 = ±1.
bool is_automorphism_system(std::span<MElement const> gs);

/// Searches F_p^n for primes p <= max_prime, smallest prime first.
std::optional<VanishingPoint> find_vanishing_point(std::span<Poly const> polys,
                                                   std::uint64_t max_prime = 13,
                                                   std::uint64_t max_points = 1u << 20);

/// Smallest prime factor of |a| found by trial division below 10^6; beyond
/// that |a| itself if it fits 64 bits, else 0. Returns 0 for |a| < 2.
std::uint64_t smallest_prime_factor(Integer const &a);

} // namespace metlie
