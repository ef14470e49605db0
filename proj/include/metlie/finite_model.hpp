#pragma once

#include "metlie/lie_expr.hpp"
#include "metlie/metlie.hpp"
#include "metlie/quotient.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace metlie {

/// Carrier of the top-left entry.
enum class TopLeft
{
	linear_only, // linear polynomials without free term, coefficients mod m
	full_ring    // all of ℤ_{p,q,m}[X]
};

std::string to_string(TopLeft t);

struct ModelParams
{
	QuotientParams quotient;
	TopLeft top_left = TopLeft::linear_only;
};

/// The matrix (l 0 / τ 0): l in the top-left carrier, τ in the free module
/// A^n over A = ℤ_{p,q,m}[X] with basis t_1..t_n.
struct ModelElement
{
	QPoly l;
	std::vector<QPoly> tau;

	friend bool operator==(ModelElement const &, ModelElement const &) = default;
};

/// The finite metabelian Lie ring 𝓜_{p,q,m}.
class FiniteModel
{
  public:
	using Element = ModelElement;

	explicit FiniteModel(ModelParams const &params);

	ModelParams const &params() const { return params_; }
	QuotientRing const &ring() const { return *ring_; }
	QuotientRingPtr const &ring_ptr() const { return ring_; }
	int n() const { return params_.quotient.n; }
	std::uint32_t modulus() const { return params_.quotient.m; }

	/// Number of admissible top-left entries.
	Integer top_left_count() const;
	/// |R| = top_left_count() · |A|^n.
	Integer size() const;
	double log2_size() const;

	// LieRing interface
	ModelElement zero() const;
	ModelElement add(ModelElement const &a, ModelElement const &b) const;
	ModelElement neg(ModelElement const &a) const;
	ModelElement scale(Integer const &c, ModelElement const &a) const;
	ModelElement bracket(ModelElement const &a, ModelElement const &b) const;

	/// Image of x_i (1-based): l = x_i, τ = t_i.
	ModelElement generator(int i) const;

	bool admissible_top_left(QPoly const &l) const;
	/// Position of l in the enumeration of the top-left carrier.
	std::uint64_t top_left_index(QPoly const &l) const;
	QPoly top_left_at(std::uint64_t index) const;

	/// index = top_left_index(l) + L·Σ_{c,μ} coeff(τ_c, μ)·m^{c·D + μ}.
	Integer encode(ModelElement const &a) const;
	ModelElement decode(Integer const &index) const;

	ModelElement random_element(std::mt19937_64 &rng) const;

	std::string format(ModelElement const &a) const;

  private:
	void check(ModelElement const &a) const;

	ModelParams params_;
	QuotientRingPtr ring_;
};

/// [a, b] = (0, τ_a·l_b - τ_b·l_a).
inline ModelElement model_bracket(FiniteModel const &model, ModelElement const &a,
                                  ModelElement const &b)
{
	return model.bracket(a, b);
}

/// ψ_g(r_1..r_n) = (ḡ(s), Σ_i τ_i·∂̄_i g(s)) with r_i = (s_i, τ_i).
ModelElement eval_closed_form(MElement const &g, std::span<ModelElement const> r,
                              FiniteModel const &model);
ModelElement eval_closed_form(MElement const &g, std::span<QPoly const> s,
                              std::span<std::vector<QPoly> const> tau, FiniteModel const &model);

// ---------------------------------------------------------------------------
// Uniformity

enum class UniformityMethod
{
	automatic, // exhaustive when within budget, census otherwise
	exhaustive,
	census,
	serial // plain reference enumeration, no partitioning
};

std::string to_string(UniformityMethod m);

struct UniformityOptions
{
	/// Maximum number of substitutions r^n evaluated by enumeration.
	std::uint64_t budget = std::uint64_t(1) << 28;
	/// Maximum number of fiber keys |R|^k held by the histogram.
	std::uint64_t histogram_limit = std::uint64_t(1) << 24;
	/// Maximum estimated work of the census (top-left tuples × matrix cost).
	std::uint64_t census_budget = std::uint64_t(1) << 34;
	/// Enumeration cap for the exact minimum fiber in the census.
	std::uint64_t census_min_patterns = std::uint64_t(1) << 16;
	UniformityMethod method = UniformityMethod::automatic;
	/// OpenMP threads (0 = runtime default).
	int threads = 0;

	/// Default budget, overridden by METLIE_BUDGET when set.
	static UniformityOptions from_environment();
};

struct FiberWitness
{
	Integer index;                     // encoded target k-tuple
	std::vector<std::string> elements; // the target elements, formatted
	Integer fiber;
};

struct UniformityReport
{
	std::string kind; // "matrix" or "abelian"
	ModelParams params;
	std::uint64_t abelian_modulus = 0;
	int n = 0;
	std::size_t k = 0;
	Integer model_size;
	Integer expected_fiber;
	std::optional<Integer> fiber_min; // absent when the census cannot pin it down
	Integer fiber_max;
	Integer total; // Σ of all fibers, always |R|^n
	bool uniform = false;
	std::optional<FiberWitness> witness;
	UniformityMethod method = UniformityMethod::exhaustive;
	double elapsed_ms = 0;
};

/// Decides whether ψ_{g_1..g_k} is uniformly distributed on the model.
/// Throws BudgetExceeded if the chosen method does not fit the options.
UniformityReport uniformity_check(std::span<MElement const> gs, FiniteModel const &model,
                                  UniformityOptions const &options = {});

/// The abelian ring ℤ_m: only linear parts matter.
UniformityReport uniformity_check_abelian(std::span<MElement const> gs, std::uint64_t m,
                                          UniformityOptions const &options = {});

// Individual methods, exposed for cross-checking and benchmarks.
UniformityReport uniformity_exhaustive(std::span<MElement const> gs, FiniteModel const &model,
                                       UniformityOptions const &options);
UniformityReport uniformity_serial(std::span<MElement const> gs, FiniteModel const &model,
                                   UniformityOptions const &options);
UniformityReport uniformity_census(std::span<MElement const> gs, FiniteModel const &model,
                                   UniformityOptions const &options);

/// One model of a witness grid: either abelian ℤ_m or a matrix model.
struct GridEntry
{
	std::optional<ModelParams> matrix;
	std::uint64_t abelian_modulus = 0;

	std::string describe() const;
};

/// Abelian moduli first (ascending), then matrix models by increasing |R|.
std::vector<GridEntry> order_grid(std::span<QuotientParams const> matrix,
                                  std::span<std::uint64_t const> abelian, int n,
                                  TopLeft top_left = TopLeft::linear_only);

struct WitnessSearchResult
{
	std::optional<UniformityReport> witness;
	std::vector<UniformityReport> passed;
	std::vector<std::string> skipped; // entries over budget, with the reason
};

/// Checks grid entries in order and stops at the first non-uniform model.
WitnessSearchResult witness_search(std::span<MElement const> gs,
                                   std::span<GridEntry const> grid,
                                   UniformityOptions const &options = {});

} // namespace metlie
