#include "metlie/finite_model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace metlie {

std::string to_string(TopLeft t)
{
	return t == TopLeft::linear_only ? "linear" : "full";
}

std::string to_string(UniformityMethod m)
{
	switch (m)
	{
	case UniformityMethod::automatic: return "auto";
	case UniformityMethod::exhaustive: return "exhaustive";
	case UniformityMethod::census: return "census";
	case UniformityMethod::serial: return "serial";
	}
	return "?";
}

UniformityOptions UniformityOptions::from_environment()
{
	UniformityOptions o;
	if (char const *env = std::getenv("METLIE_BUDGET"))
	{
		char *end = nullptr;
		auto v = std::strtoull(env, &end, 10);
		if (end == env || *end != '\0' || v == 0)
			throw DomainError(fmt::format("METLIE_BUDGET must be a positive integer, got '{}'", env));
		o.budget = v;
	}
	return o;
}

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

std::optional<u64> checked_pow(u64 base, u64 exp)
{
	u64 r = 1;
	for (u64 i = 0; i < exp; ++i)
	{
		if (base != 0 && r > std::numeric_limits<u64>::max() / base)
			return std::nullopt;
		r *= base;
	}
	return r;
}

Integer ipow(Integer const &base, u64 exp)
{
	Integer r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
	return r;
}

double ms_since(Clock::time_point start)
{
	return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

// ---------------------------------------------------------------------------
// FiniteModel

FiniteModel::FiniteModel(ModelParams const &params)
    : params_(params), ring_(QuotientRing::make(params.quotient))
{}

Integer FiniteModel::top_left_count() const
{
	u64 digits = params_.top_left == TopLeft::linear_only ? u64(n()) : ring_->dimension();
	return pow_u64(modulus(), digits);
}

Integer FiniteModel::size() const
{
	return top_left_count() * pow_u64(modulus(), u64(n()) * ring_->dimension());
}

double FiniteModel::log2_size() const
{
	double digits = params_.top_left == TopLeft::linear_only ? n() : double(ring_->dimension());
	digits += double(n()) * double(ring_->dimension());
	return digits * std::log2(double(modulus()));
}

void FiniteModel::check(ModelElement const &a) const
{
	if (static_cast<int>(a.tau.size()) != n())
		throw DimensionError("model element has the wrong number of module coordinates");
	if (!(a.l.ring().params() == params_.quotient))
		throw DimensionError("model element from a different model");
	if (!admissible_top_left(a.l))
		throw DomainError("top-left entry outside the carrier of this model");
}

ModelElement FiniteModel::zero() const
{
	return {ring_->zero(), std::vector<QPoly>(n(), ring_->zero())};
}

ModelElement FiniteModel::add(ModelElement const &a, ModelElement const &b) const
{
	check(a);
	check(b);
	ModelElement r{a.l + b.l, a.tau};
	for (int c = 0; c < n(); ++c)
		r.tau[c] += b.tau[c];
	return r;
}

ModelElement FiniteModel::neg(ModelElement const &a) const
{
	check(a);
	ModelElement r{-a.l, a.tau};
	for (auto &t : r.tau)
		t = -t;
	return r;
}

ModelElement FiniteModel::scale(Integer const &c, ModelElement const &a) const
{
	check(a);
	u64 k = mod_u64(c, modulus());
	ModelElement r = a;
	r.l *= k;
	for (auto &t : r.tau)
		t *= k;
	return r;
}

ModelElement FiniteModel::bracket(ModelElement const &a, ModelElement const &b) const
{
	check(a);
	check(b);
	ModelElement r = zero();
	for (int c = 0; c < n(); ++c)
		r.tau[c] = a.tau[c] * b.l - b.tau[c] * a.l;
	return r;
}

ModelElement FiniteModel::generator(int i) const
{
	if (i < 1 || i > n())
		throw DomainError(fmt::format("generator x{} outside x1..x{}", i, n()));
	ModelElement r = zero();
	r.l = ring_->variable(i - 1);
	r.tau[i - 1] = ring_->one();
	return r;
}

bool FiniteModel::admissible_top_left(QPoly const &l) const
{
	if (params_.top_left == TopLeft::full_ring)
		return true;
	std::vector<bool> allowed(ring_->dimension(), false);
	for (int i = 0; i < n(); ++i)
		allowed[ring_->variable_index(i)] = true;
	for (std::size_t idx = 0; idx < ring_->dimension(); ++idx)
		if (l.coefficient(idx) != 0 && !allowed[idx])
			return false;
	return true;
}

std::uint64_t FiniteModel::top_left_index(QPoly const &l) const
{
	if (!admissible_top_left(l))
		throw DomainError("top-left entry outside the model's carrier");
	auto count = to_u64(top_left_count());
	if (!count)
		throw BudgetExceeded("top-left carrier too large to index");
	u64 idx = 0, weight = 1;
	if (params_.top_left == TopLeft::linear_only)
		for (int i = 0; i < n(); ++i, weight *= modulus())
			idx += l.coefficient(ring_->variable_index(i)) * weight;
	else
		for (std::size_t mu = 0; mu < ring_->dimension(); ++mu, weight *= modulus())
			idx += l.coefficient(mu) * weight;
	return idx;
}

QPoly FiniteModel::top_left_at(std::uint64_t index) const
{
	QPoly l = ring_->zero();
	auto c = l.coefficients();
	if (params_.top_left == TopLeft::linear_only)
		for (int i = 0; i < n(); ++i, index /= modulus())
			c[ring_->variable_index(i)] = static_cast<std::uint32_t>(index % modulus());
	else
		for (std::size_t mu = 0; mu < ring_->dimension(); ++mu, index /= modulus())
			c[mu] = static_cast<std::uint32_t>(index % modulus());
	return l;
}

Integer FiniteModel::encode(ModelElement const &a) const
{
	check(a);
	Integer tau_index = 0;
	std::size_t const dim = ring_->dimension();
	for (int c = n(); c-- > 0;)
		for (std::size_t mu = dim; mu-- > 0;)
			tau_index = tau_index * modulus() + a.tau[c].coefficient(mu);
	return Integer(static_cast<unsigned long>(top_left_index(a.l))) + top_left_count() * tau_index;
}

ModelElement FiniteModel::decode(Integer const &index) const
{
	Integer L = top_left_count();
	if (index < 0 || index >= size())
		throw DomainError("model element index out of range");
	Integer rest = index / L;
	Integer tl = index % L;
	ModelElement r = zero();
	r.l = top_left_at(to_u64(tl).value());
	std::size_t const dim = ring_->dimension();
	for (int c = 0; c < n(); ++c)
	{
		auto coeffs = r.tau[c].coefficients();
		for (std::size_t mu = 0; mu < dim; ++mu)
		{
			coeffs[mu] = static_cast<std::uint32_t>(mod_u64(rest, modulus()));
			rest /= modulus();
		}
	}
	return r;
}

ModelElement FiniteModel::random_element(std::mt19937_64 &rng) const
{
	std::uniform_int_distribution<std::uint32_t> digit(0, modulus() - 1);
	ModelElement r = zero();
	auto lc = r.l.coefficients();
	if (params_.top_left == TopLeft::linear_only)
		for (int i = 0; i < n(); ++i)
			lc[ring_->variable_index(i)] = digit(rng);
	else
		for (auto &c : lc)
			c = digit(rng);
	for (auto &t : r.tau)
		for (auto &c : t.coefficients())
			c = digit(rng);
	return r;
}

std::string FiniteModel::format(ModelElement const &a) const
{
	std::string s = "(" + metlie::format(a.l) + " | ";
	for (int c = 0; c < n(); ++c)
		s += (c ? ", " : "") + metlie::format(a.tau[c]);
	return s + ")";
}

// ---------------------------------------------------------------------------
// Closed form

ModelElement eval_closed_form(MElement const &g, std::span<QPoly const> s,
                              std::span<std::vector<QPoly> const> tau, FiniteModel const &model)
{
	int const n = model.n();
	if (g.n != n || static_cast<int>(s.size()) != n || static_cast<int>(tau.size()) != n)
		throw DimensionError("closed form: sizes differ from the model's generator count");
	auto const &ring = model.ring();
	ModelElement r = model.zero();
	r.l = evaluate(g.linear_poly(), s, ring);
	for (int i = 0; i < n; ++i)
	{
		if (g.deriv[i].is_zero())
			continue;
		QPoly d = evaluate(g.deriv[i], s, ring);
		if (static_cast<int>(tau[i].size()) != n)
			throw DimensionError("closed form: module vector of the wrong length");
		for (int c = 0; c < n; ++c)
			r.tau[c] += tau[i][c] * d;
	}
	return r;
}

ModelElement eval_closed_form(MElement const &g, std::span<ModelElement const> r,
                              FiniteModel const &model)
{
	std::vector<QPoly> s;
	std::vector<std::vector<QPoly>> tau;
	for (auto const &e : r)
	{
		s.push_back(e.l);
		tau.push_back(e.tau);
	}
	return eval_closed_form(g, s, tau, model);
}

// ---------------------------------------------------------------------------
// Uniformity: shared pieces

namespace {

void check_system(std::span<MElement const> gs, int n)
{
	if (gs.empty())
		throw DomainError("empty system");
	for (auto const &g : gs)
		if (g.n != n)
			throw DimensionError(
			    fmt::format("system over {} generators checked on a model with {}", g.n, n));
	if (gs.size() > static_cast<std::size_t>(n))
		throw DomainError("more system elements than generators");
}

UniformityReport base_report(std::span<MElement const> gs, FiniteModel const &model)
{
	UniformityReport r;
	r.kind = "matrix";
	r.params = model.params();
	r.n = model.n();
	r.k = gs.size();
	r.model_size = model.size();
	r.expected_fiber = ipow(r.model_size, r.n - r.k);
	return r;
}

/// Values attached to one tuple s of top-left entries.
struct Substitution
{
	std::vector<QPoly> s;
	std::vector<u64> a;                // top-left index of ḡ_j(s)
	std::vector<std::vector<QPoly>> d; // d[i][j] = ∂̄_i g_j(s)
};

class SystemEvaluator
{
  public:
	SystemEvaluator(std::span<MElement const> gs, FiniteModel const &model)
	    : model_(model), gs_(gs.begin(), gs.end())
	{
		for (auto const &g : gs_)
			linear_.push_back(g.linear_poly());
	}

	std::size_t k() const { return gs_.size(); }

	Substitution at(u64 tuple, u64 L) const
	{
		int const n = model_.n();
		auto const &ring = model_.ring();
		Substitution sub;
		for (int i = 0; i < n; ++i, tuple /= L)
			sub.s.push_back(model_.top_left_at(tuple % L));
		for (std::size_t j = 0; j < k(); ++j)
			sub.a.push_back(model_.top_left_index(evaluate(linear_[j], sub.s, ring)));
		sub.d.assign(n, std::vector<QPoly>(k(), ring.zero()));
		for (int i = 0; i < n; ++i)
			for (std::size_t j = 0; j < k(); ++j)
				if (!gs_[j].deriv[i].is_zero())
					sub.d[i][j] = evaluate(gs_[j].deriv[i], sub.s, ring);
		return sub;
	}

  private:
	FiniteModel const &model_;
	std::vector<MElement> gs_;
	std::vector<Poly> linear_;
};

/// Turns a complete histogram over all |R|^k keys into fiber statistics.
void summarize(UniformityReport &r, std::vector<std::pair<u64, u64>> const &counts, u64 keys,
               std::function<std::vector<std::string>(u64)> const &describe)
{
	u64 const expected = to_u64(r.expected_fiber).value();
	u64 mn = std::numeric_limits<u64>::max(), mx = 0;
	Integer total = 0;
	std::optional<u64> witness;
	u64 witness_count = 0;
	u64 next = 0; // first key not yet accounted for
	auto consider = [&](u64 key, u64 count) {
		mn = std::min(mn, count);
		mx = std::max(mx, count);
		if (!witness && count != expected)
		{
			witness = key;
			witness_count = count;
		}
	};
	for (auto const &[key, count] : counts)
	{
		if (key > next)
			consider(next, 0);
		consider(key, count);
		total += Integer(static_cast<unsigned long>(count));
		next = key + 1;
	}
	if (next < keys)
		consider(next, 0);
	if (keys == 0)
		mn = 0;
	r.fiber_min = Integer(static_cast<unsigned long>(mn));
	r.fiber_max = Integer(static_cast<unsigned long>(mx));
	r.total = total;
	r.uniform = mn == expected && mx == expected;
	if (witness)
		r.witness = FiberWitness{Integer(static_cast<unsigned long>(*witness)), describe(*witness),
		                         Integer(static_cast<unsigned long>(witness_count))};
}

std::vector<std::string> describe_tuple(FiniteModel const &model, Integer key, std::size_t k)
{
	std::vector<std::string> out;
	Integer R = model.size();
	for (std::size_t j = 0; j < k; ++j)
	{
		out.push_back(model.format(model.decode(key % R)));
		key /= R;
	}
	return out;
}

struct ExhaustiveShape
{
	u64 m, D, n, k, L, R, keys, tuples, ntau;
};

ExhaustiveShape exhaustive_shape(std::span<MElement const> gs, FiniteModel const &model,
                                 UniformityOptions const &options)
{
	ExhaustiveShape sh{};
	sh.m = model.modulus();
	sh.D = model.ring().dimension();
	sh.n = model.n();
	sh.k = gs.size();
	if (model.log2_size() * double(sh.n) > 63)
		throw BudgetExceeded("enumeration size exceeds 2^63");
	Integer total = ipow(model.size(), sh.n);
	if (total > Integer(static_cast<unsigned long>(options.budget)))
		throw BudgetExceeded(fmt::format("enumeration of {} substitutions exceeds the budget {}",
		                                 total.get_str(), options.budget));
	if (total >= Integer(1) << 32)
		throw BudgetExceeded("exhaustive enumeration is limited to 2^32 substitutions");
	Integer keys = ipow(model.size(), sh.k);
	if (keys > Integer(static_cast<unsigned long>(options.histogram_limit)))
		throw BudgetExceeded(fmt::format("histogram of {} fiber keys exceeds the limit {}",
		                                 keys.get_str(), options.histogram_limit));
	sh.L = to_u64(model.top_left_count()).value();
	sh.R = to_u64(model.size()).value();
	sh.keys = to_u64(keys).value();
	sh.tuples = checked_pow(sh.L, sh.n).value();
	sh.ntau = checked_pow(sh.m, sh.n * sh.n * sh.D).value();
	return sh;
}

/// Histogram of encoded fiber keys owned by one worker.
class Histogram
{
  public:
	explicit Histogram(u64 keys) : keys_(keys)
	{
		if (keys <= (u64(1) << 22))
			dense_.assign(keys, 0);
	}

	void add(u64 key, u64 count = 1)
	{
		if (!dense_.empty())
			dense_[key] += static_cast<std::uint32_t>(count);
		else
			sparse_[key] += count;
	}

	void merge(Histogram const &other)
	{
		if (!dense_.empty())
			for (u64 key = 0; key < keys_; ++key)
				dense_[key] += other.dense_[key];
		else
			for (auto const &[key, c] : other.sparse_)
				sparse_[key] += c;
	}

	std::vector<std::pair<u64, u64>> sorted() const
	{
		std::vector<std::pair<u64, u64>> out;
		if (!dense_.empty())
		{
			for (u64 key = 0; key < keys_; ++key)
				if (dense_[key] != 0)
					out.emplace_back(key, dense_[key]);
		}
		else
		{
			out.assign(sparse_.begin(), sparse_.end());
			std::sort(out.begin(), out.end());
		}
		return out;
	}

  private:
	u64 keys_;
	std::vector<std::uint32_t> dense_;
	std::unordered_map<u64, u64> sparse_;
};

/// Per-tuple data of the odometer kernel: the column added to the output
/// digits when one input digit is incremented.
struct KernelTuple
{
	u64 key0;                        // contribution of the top-left entries
	std::vector<std::uint32_t> cols; // [digit][j*D + ν]
};

KernelTuple kernel_tuple(Substitution const &sub, ExhaustiveShape const &sh,
                         QuotientRing const &ring)
{
	KernelTuple kt;
	kt.key0 = 0;
	u64 weight = 1;
	for (u64 j = 0; j < sh.k; ++j, weight *= sh.R)
		kt.key0 += sub.a[j] * weight;
	u64 const T = sh.n * sh.n * sh.D;
	kt.cols.assign(T * sh.k * sh.D, 0);
	std::vector<std::uint32_t> mono(sh.D);
	for (u64 i = 0; i < sh.n; ++i)
		for (u64 c = 0; c < sh.n; ++c)
			for (u64 mu = 0; mu < sh.D; ++mu)
			{
				u64 t = (i * sh.n + c) * sh.D + mu;
				std::fill(mono.begin(), mono.end(), 0);
				mono[mu] = 1;
				for (u64 j = 0; j < sh.k; ++j)
				{
					std::span<std::uint32_t> out(&kt.cols[(t * sh.k + j) * sh.D], sh.D);
					ring.mul_accumulate(mono, sub.d[i][j].coefficients(), out);
				}
			}
	return kt;
}

/// Enumerates the τ-range [start, start+count) for one top-left tuple.
void run_chunk(KernelTuple const &kt, ExhaustiveShape const &sh,
               std::vector<u64> const &weights, u64 start, u64 count, Histogram &hist)
{
	u64 const T = sh.n * sh.n * sh.D;
	u64 const m = sh.m;
	std::vector<std::uint32_t> digit(T, 0);
	std::vector<std::uint32_t> out(sh.k * sh.n * sh.D, 0); // [(j*n + c)*D + ν]
	u64 key = kt.key0;

	auto add_column = [&](u64 t, u64 times) {
		u64 const c = (t / sh.D) % sh.n;
		for (u64 j = 0; j < sh.k; ++j)
		{
			std::uint32_t const *col = &kt.cols[(t * sh.k + j) * sh.D];
			for (u64 nu = 0; nu < sh.D; ++nu)
			{
				if (col[nu] == 0)
					continue;
				u64 idx = (j * sh.n + c) * sh.D + nu;
				u64 old = out[idx];
				u64 now = (old + col[nu] * times) % m;
				out[idx] = static_cast<std::uint32_t>(now);
				key += (now - old) * weights[idx]; // wraps correctly modulo 2^64
			}
		}
	};

	u64 rest = start;
	for (u64 t = 0; t < T && rest != 0; ++t, rest /= m)
	{
		digit[t] = static_cast<std::uint32_t>(rest % m);
		if (digit[t] != 0)
			add_column(t, digit[t]);
	}

	for (u64 step = 0; step < count; ++step)
	{
		hist.add(key);
		if (step + 1 == count)
			break;
		for (u64 t = 0; t < T; ++t)
		{
			add_column(t, 1);
			if (++digit[t] < m)
				break;
			digit[t] = 0;
		}
	}
}

} // namespace

UniformityReport uniformity_exhaustive(std::span<MElement const> gs, FiniteModel const &model,
                                       UniformityOptions const &options)
{
	auto start = Clock::now();
	check_system(gs, model.n());
	auto sh = exhaustive_shape(gs, model, options);
	UniformityReport report = base_report(gs, model);
	report.method = UniformityMethod::exhaustive;

	// weight of output digit (j, c, ν) in the fiber key
	std::vector<u64> weights(sh.k * sh.n * sh.D);
	for (u64 j = 0; j < sh.k; ++j)
		for (u64 c = 0; c < sh.n; ++c)
			for (u64 nu = 0; nu < sh.D; ++nu)
				weights[(j * sh.n + c) * sh.D + nu] = checked_pow(sh.R, j).value() * sh.L *
				                                      checked_pow(sh.m, c * sh.D + nu).value();

	SystemEvaluator eval(gs, model);
	std::vector<KernelTuple> tuples;
	tuples.reserve(sh.tuples);
	for (u64 s = 0; s < sh.tuples; ++s)
		tuples.push_back(kernel_tuple(eval.at(s, sh.L), sh, model.ring()));

	u64 const chunk = std::min<u64>(sh.ntau, u64(1) << 16);
	u64 const chunks_per_tuple = (sh.ntau + chunk - 1) / chunk;
	std::int64_t const items = static_cast<std::int64_t>(sh.tuples * chunks_per_tuple);

	Histogram total(sh.keys);
#ifdef _OPENMP
	int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
	{
		Histogram local(sh.keys);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
		for (std::int64_t item = 0; item < items; ++item)
		{
			u64 s = static_cast<u64>(item) / chunks_per_tuple;
			u64 first = (static_cast<u64>(item) % chunks_per_tuple) * chunk;
			u64 count = std::min(chunk, sh.ntau - first);
			run_chunk(tuples[s], sh, weights, first, count, local);
		}
#ifdef _OPENMP
#pragma omp critical(metlie_histogram_merge)
#endif
		total.merge(local);
	}

	summarize(report, total.sorted(), sh.keys,
	          [&](u64 key) { return describe_tuple(model, Integer(static_cast<unsigned long>(key)), sh.k); });
	report.elapsed_ms = ms_since(start);
	return report;
}

UniformityReport uniformity_serial(std::span<MElement const> gs, FiniteModel const &model,
                                   UniformityOptions const &options)
{
	auto start = Clock::now();
	check_system(gs, model.n());
	auto sh = exhaustive_shape(gs, model, options);
	UniformityReport report = base_report(gs, model);
	report.method = UniformityMethod::serial;

	u64 const total = checked_pow(sh.R, sh.n).value();
	std::map<u64, u64> hist;
	std::vector<ModelElement> r(sh.n);
	for (u64 t = 0; t < total; ++t)
	{
		u64 rest = t;
		for (u64 i = 0; i < sh.n; ++i, rest /= sh.R)
			r[i] = model.decode(Integer(static_cast<unsigned long>(rest % sh.R)));
		u64 key = 0, weight = 1;
		for (u64 j = 0; j < sh.k; ++j, weight *= sh.R)
			key += to_u64(model.encode(eval_closed_form(gs[j], r, model))).value() * weight;
		++hist[key];
	}
	std::vector<std::pair<u64, u64>> counts(hist.begin(), hist.end());
	summarize(report, counts, sh.keys,
	          [&](u64 key) { return describe_tuple(model, Integer(static_cast<unsigned long>(key)), sh.k); });
	report.elapsed_ms = ms_since(start);
	return report;
}

// ---------------------------------------------------------------------------
// Census: exact fiber sizes from the linear structure of ψ.
//
// For a fixed tuple s of top-left entries, τ -> Σ_i τ_i·∂̄_i g_j(s) acts on
// each module coordinate c by the same ℤ_m-linear map φ_s: A^n -> A^k.
// The fiber over (a, τ̃) is therefore Σ_{s : ḡ(s) = a} |ker φ_s|^n, counting
// only those s whose image contains every coordinate slice of τ̃.

namespace {

ModMatrix phi_matrix(Substitution const &sub, u64 n, u64 k, QuotientRing const &ring)
{
	u64 const D = ring.dimension();
	ModMatrix a(ring.modulus(), n * D, k * D);
	std::vector<std::uint32_t> mono(D), prod(D);
	for (u64 i = 0; i < n; ++i)
		for (u64 mu = 0; mu < D; ++mu)
		{
			std::fill(mono.begin(), mono.end(), 0);
			mono[mu] = 1;
			for (u64 j = 0; j < k; ++j)
			{
				std::fill(prod.begin(), prod.end(), 0);
				ring.mul_accumulate(mono, sub.d[i][j].coefficients(), prod);
				for (u64 nu = 0; nu < D; ++nu)
					a.at(i * D + mu, j * D + nu) = prod[nu];
			}
		}
	return a;
}

struct CensusGroup
{
	Integer weight; // Σ |ker φ_s|^n, the fiber over (a, 0)
	std::vector<u64> tuples;
	std::vector<Integer> kernel_powers;
};

/// Exact minimum over τ̃ of the fiber above one top-left target, or nullopt
/// when the pattern enumeration is too large.
std::optional<Integer> group_min(CensusGroup const &g, SystemEvaluator const &eval,
                                 FiniteModel const &model, u64 n, u64 k,
                                 UniformityOptions const &options)
{
	u64 const m = model.modulus();
	u64 const D = model.ring().dimension();
	auto vectors = checked_pow(m, k * D);
	if (!vectors || *vectors > options.census_min_patterns)
		return std::nullopt;
	u64 const L = to_u64(model.top_left_count()).value();

	std::vector<ModSubgroup> images;
	for (u64 s : g.tuples)
		images.emplace_back(phi_matrix(eval.at(s, L), n, k, model.ring()));

	// membership pattern of each vector v ∈ A^k across the tuples of the group
	std::set<std::vector<bool>> patterns;
	std::vector<u64> v(k * D, 0);
	for (u64 idx = 0; idx < *vectors; ++idx)
	{
		u64 rest = idx;
		for (auto &x : v)
		{
			x = rest % m;
			rest /= m;
		}
		std::vector<bool> pattern;
		for (auto const &img : images)
			pattern.push_back(img.contains(v));
		patterns.insert(std::move(pattern));
	}

	std::vector<std::vector<bool>> list(patterns.begin(), patterns.end());
	auto combos = checked_pow(list.size(), n);
	if (!combos || *combos > options.census_min_patterns)
		return std::nullopt;
	std::optional<Integer> best;
	std::vector<std::size_t> pick(n, 0);
	for (u64 c = 0; c < *combos; ++c)
	{
		u64 rest = c;
		for (auto &p : pick)
		{
			p = rest % list.size();
			rest /= list.size();
		}
		Integer sum = 0;
		for (std::size_t s = 0; s < g.tuples.size(); ++s)
		{
			bool in_all = true;
			for (auto p : pick)
				in_all = in_all && list[p][s];
			if (in_all)
				sum += g.kernel_powers[s];
		}
		if (!best || sum < *best)
			best = sum;
	}
	return best;
}

} // namespace

UniformityReport uniformity_census(std::span<MElement const> gs, FiniteModel const &model,
                                   UniformityOptions const &options)
{
	auto start = Clock::now();
	check_system(gs, model.n());
	UniformityReport report = base_report(gs, model);
	report.method = UniformityMethod::census;
	u64 const n = model.n(), k = gs.size();
	u64 const D = model.ring().dimension();

	auto L = to_u64(model.top_left_count());
	auto tuples = L ? checked_pow(*L, n) : std::nullopt;
	double work = double(n * D) * double(n * D) * double(k * D);
	if (!tuples || double(*tuples) * work > double(options.census_budget))
		throw BudgetExceeded(fmt::format("census over {} top-left tuples exceeds the budget",
		                                 model.top_left_count().get_str() + "^" + std::to_string(n)));

	SystemEvaluator eval(gs, model);
	std::map<std::vector<u64>, CensusGroup> groups;
	Integer total = 0;
	for (u64 s = 0; s < *tuples; ++s)
	{
		auto sub = eval.at(s, *L);
		auto orders = map_orders(phi_matrix(sub, n, k, model.ring()));
		Integer kp = ipow(orders.kernel, n);
		auto &g = groups[sub.a];
		g.weight += kp;
		g.tuples.push_back(s);
		g.kernel_powers.push_back(kp);
		total += ipow(orders.kernel * orders.image, n);
	}
	report.total = total;

	Integer const targets_l = ipow(model.top_left_count(), k);
	bool const all_attained = Integer(static_cast<unsigned long>(groups.size())) == targets_l;
	Integer max = 0;
	std::vector<u64> argmax;
	for (auto const &[a, g] : groups)
		if (g.weight > max)
		{
			max = g.weight;
			argmax = a;
		}
	report.fiber_max = max;
	report.uniform = all_attained && max == report.expected_fiber;

	Integer R = model.size();
	auto key_of = [&](std::vector<u64> const &a) {
		Integer key = 0, weight = 1;
		for (u64 j = 0; j < k; ++j, weight *= R)
			key += Integer(static_cast<unsigned long>(a[j])) * weight;
		return key;
	};

	if (report.uniform)
		report.fiber_min = report.expected_fiber;
	else if (!all_attained)
	{
		report.fiber_min = Integer(0);
		// first unattained top-left target in key order (last coordinate most significant)
		std::vector<u64> a(k, 0);
		while (groups.count(a))
		{
			std::size_t j = 0;
			while (++a[j] == *L)
				a[j++] = 0;
		}
		auto key = key_of(a);
		report.witness = FiberWitness{key, describe_tuple(model, key, k), Integer(0)};
	}
	else
	{
		std::optional<Integer> mn = max;
		for (auto const &[a, g] : groups)
		{
			auto gm = group_min(g, eval, model, n, k, options);
			if (!gm)
			{
				mn.reset();
				break;
			}
			if (*gm < *mn)
				mn = gm;
		}
		report.fiber_min = mn;
	}
	if (!report.uniform && !report.witness)
	{
		auto key = key_of(argmax);
		report.witness = FiberWitness{key, describe_tuple(model, key, k), max};
	}
	report.elapsed_ms = ms_since(start);
	return report;
}

UniformityReport uniformity_check(std::span<MElement const> gs, FiniteModel const &model,
                                  UniformityOptions const &options)
{
	switch (options.method)
	{
	case UniformityMethod::exhaustive: return uniformity_exhaustive(gs, model, options);
	case UniformityMethod::census: return uniformity_census(gs, model, options);
	case UniformityMethod::serial: return uniformity_serial(gs, model, options);
	case UniformityMethod::automatic: break;
	}
	check_system(gs, model.n());
	Integer evals = ipow(model.size(), model.n());
	Integer keys = ipow(model.size(), gs.size());
	if (evals <= Integer(static_cast<unsigned long>(options.budget)) && evals < Integer(1) << 32 &&
	    keys <= Integer(static_cast<unsigned long>(options.histogram_limit)))
		return uniformity_exhaustive(gs, model, options);
	return uniformity_census(gs, model, options);
}

UniformityReport uniformity_check_abelian(std::span<MElement const> gs, std::uint64_t m,
                                          UniformityOptions const &options)
{
	auto start = Clock::now();
	if (gs.empty())
		throw DomainError("empty system");
	int const n = gs[0].n;
	check_system(gs, n);
	if (m < 2)
		throw DomainError("abelian modulus must be at least 2");
	u64 const k = gs.size();
	auto total = checked_pow(m, n);
	auto keys = checked_pow(m, k);
	if (!total || *total > options.budget)
		throw BudgetExceeded(fmt::format("abelian enumeration of {}^{} exceeds the budget", m, n));
	if (!keys || *keys > options.histogram_limit)
		throw BudgetExceeded("abelian histogram exceeds the limit");

	UniformityReport report;
	report.kind = "abelian";
	report.abelian_modulus = m;
	report.n = n;
	report.k = k;
	report.model_size = Integer(static_cast<unsigned long>(m));
	report.expected_fiber = pow_u64(m, n - k);
	report.method = UniformityMethod::exhaustive;

	std::vector<std::vector<u64>> coeff(k, std::vector<u64>(n));
	for (u64 j = 0; j < k; ++j)
		for (int i = 0; i < n; ++i)
			coeff[j][i] = mod_u64(gs[j].linear[i], m);

	std::vector<u64> hist(*keys, 0);
	std::vector<u64> r(n, 0);
	for (u64 t = 0; t < *total; ++t)
	{
		u64 rest = t;
		for (auto &x : r)
		{
			x = rest % m;
			rest /= m;
		}
		u64 key = 0, weight = 1;
		for (u64 j = 0; j < k; ++j, weight *= m)
		{
			u64 v = 0;
			for (int i = 0; i < n; ++i)
				v = (v + coeff[j][i] * r[i]) % m;
			key += v * weight;
		}
		++hist[key];
	}
	std::vector<std::pair<u64, u64>> counts;
	for (u64 key = 0; key < *keys; ++key)
		if (hist[key])
			counts.emplace_back(key, hist[key]);
	summarize(report, counts, *keys, [&](u64 key) {
		std::vector<std::string> out;
		for (u64 j = 0; j < k; ++j, key /= m)
			out.push_back(std::to_string(key % m));
		return out;
	});
	report.elapsed_ms = ms_since(start);
	return report;
}

// ---------------------------------------------------------------------------
// Witness search

std::string GridEntry::describe() const
{
	if (matrix)
	{
		auto const &q = matrix->quotient;
		return fmt::format("M(p={},q={},m={},{})", q.p, q.q, q.m, to_string(matrix->top_left));
	}
	return fmt::format("Z_{}", abelian_modulus);
}

std::vector<GridEntry> order_grid(std::span<QuotientParams const> matrix,
                                  std::span<std::uint64_t const> abelian, int n,
                                  TopLeft top_left)
{
	std::vector<GridEntry> out;
	std::vector<std::uint64_t> moduli(abelian.begin(), abelian.end());
	std::sort(moduli.begin(), moduli.end());
	moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
	for (auto m : moduli)
		out.push_back({std::nullopt, m});

	std::vector<std::pair<double, ModelParams>> models;
	for (auto q : matrix)
	{
		q.n = n;
		q.validate();
		ModelParams mp{q, top_left};
		double digits = (top_left == TopLeft::linear_only ? n : std::pow(q.p + q.q, n)) +
		                n * std::pow(q.p + q.q, n);
		models.emplace_back(digits * std::log2(double(q.m)), mp);
	}
	std::stable_sort(models.begin(), models.end(),
	                 [](auto const &a, auto const &b) { return a.first < b.first; });
	for (auto const &[_, mp] : models)
		out.push_back({mp, 0});
	return out;
}

WitnessSearchResult witness_search(std::span<MElement const> gs,
                                   std::span<GridEntry const> grid,
                                   UniformityOptions const &options)
{
	if (grid.empty())
		throw DomainError("witness search needs a nonempty grid");
	WitnessSearchResult out;
	for (auto const &entry : grid)
	{
		UniformityReport report;
		try
		{
			if (entry.matrix)
				report = uniformity_check(gs, FiniteModel(*entry.matrix), options);
			else
				report = uniformity_check_abelian(gs, entry.abelian_modulus, options);
		}
		catch (BudgetExceeded const &e)
		{
			out.skipped.push_back(entry.describe() + ": " + e.what());
			continue;
		}
		if (!report.uniform)
		{
			out.witness = std::move(report);
			return out;
		}
		out.passed.push_back(std::move(report));
	}
	return out;
}

} // namespace metlie
