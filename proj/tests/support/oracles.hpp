#pragma once

// Independent reference implementations used by the tests. They share only
// the value types with the library, never its algorithms.

#include "metlie/finite_model.hpp"
#include "metlie/poly.hpp"
#include "metlie/quotient.hpp"

#include <map>
#include <set>
#include <optional>
#include <vector>

namespace oracle {

using metlie::Integer;
using metlie::Poly;
using Exponents = std::vector<unsigned>;
using TermMap = std::map<Exponents, Integer>;

TermMap terms_of(Poly const &p);
Poly from_term_map(int n, TermMap const &t);

/// Schoolbook product, term by term.
Poly multiply(Poly const &a, Poly const &b);

/// Coefficients mod m, exponents e >= p+q rewritten by repeated x^(p+q) -> x^p.
TermMap reduce_quotient(Poly const &a, metlie::QuotientParams const &q);
/// The same polynomial as a dense vector indexed like QuotientRing.
std::vector<std::uint32_t> dense_quotient(Poly const &a, metlie::QuotientParams const &q);

std::int64_t eval_mod(Poly const &a, std::vector<std::int64_t> const &point, std::int64_t p);

/// Every element of the ideal generated by gens, by closing {0} under
/// addition of g·μ. Only for rings of at most 2^16 elements.
std::set<std::vector<std::uint32_t>> ideal_closure(std::vector<metlie::QPoly> const &gens);

/// Integer lattice spanned by vectors, kept in echelon form.
class Lattice
{
  public:
	explicit Lattice(std::size_t dim) : dim_(dim) {}
	void insert(std::vector<Integer> v);
	bool contains(std::vector<Integer> v) const;

  private:
	std::size_t dim_;
	std::map<std::size_t, std::vector<Integer>> rows_; // pivot -> row
};

/// 1 = Σ h_i g_i with deg h_i <= degree, decided exactly on the coefficient lattice.
bool unit_combination_exists(std::vector<Poly> const &gens, unsigned degree);

/// Common zero of all polynomials over F_p for some prime p <= max_prime.
bool common_zero_mod_small_prime(std::vector<Poly> const &gens, std::int64_t max_prime);

/// Model element as the (n+1)×(n+1) matrix with first column (l, τ_1, ..., τ_n).
using Matrix = std::vector<std::vector<metlie::QPoly>>;
Matrix as_matrix(metlie::ModelElement const &a, metlie::QuotientRingPtr const &ring);
Matrix multiply(Matrix const &a, Matrix const &b);
Matrix subtract(Matrix const &a, Matrix const &b);

/// Fiber counts of ψ by direct evaluation of the expression tree in the model.
std::map<std::vector<metlie::Integer>, std::uint64_t>
direct_fibers(std::vector<metlie::LieExprPtr> const &gs, metlie::FiniteModel const &model);

} // namespace oracle
