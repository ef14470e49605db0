#include "metlie/quotient.hpp"
#include "metlie/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace metlie {

void QuotientParams::validate() const
{
	if (p < 1 || q < 1)
		throw DomainError(fmt::format("quotient needs p, q >= 1 (got p={}, q={})", p, q));
	if (m < 2)
		throw DomainError(fmt::format("quotient needs m >= 2 (got m={})", m));
	if (m > (1u << 16))
		throw DomainError("modulus above 65536 is not supported");
	if (n < 1 || n > kMaxVars)
		throw DomainError(fmt::format("generator count {} outside 1..{}", n, kMaxVars));
}

QuotientRing::QuotientRing(QuotientParams const &params) : params_(params)
{
	params_.validate();
	unsigned base = params_.p + params_.q;
	double dim = std::pow(double(base), params_.n);
	if (dim > double(1 << 16))
		throw BudgetExceeded(
		    fmt::format("quotient ring has {} canonical monomials (limit 65536)", dim));
	dim_ = static_cast<std::size_t>(std::llround(dim));

	monomials_.reserve(dim_);
	for (std::size_t idx = 0; idx < dim_; ++idx)
	{
		Monomial m(params_.n);
		std::size_t rest = idx;
		for (int i = 0; i < params_.n; ++i)
		{
			m.set(i, static_cast<unsigned>(rest % base));
			rest /= base;
		}
		monomials_.push_back(m);
	}

	product_.resize(dim_ * dim_);
	for (std::size_t a = 0; a < dim_; ++a)
		for (std::size_t b = 0; b < dim_; ++b)
			product_[a * dim_ + b] = static_cast<std::uint32_t>(
			    index_of(reduce_monomial(monomials_[a] * monomials_[b])));

	for (int i = 0; i < params_.n; ++i)
		variable_index_.push_back(index_of(Monomial::variable(params_.n, i)));
}

std::shared_ptr<QuotientRing const> QuotientRing::make(QuotientParams const &params)
{
	return std::make_shared<QuotientRing const>(params);
}

Integer QuotientRing::cardinality() const { return pow_u64(params_.m, dim_); }

double QuotientRing::log2_cardinality() const
{
	return double(dim_) * std::log2(double(params_.m));
}

unsigned QuotientRing::reduce_exponent(unsigned e) const
{
	unsigned const p = params_.p, q = params_.q;
	if (e < p + q)
		return e;
	return p + (e - p) % q;
}

Monomial QuotientRing::reduce_monomial(Monomial const &m) const
{
	Monomial r(params_.n);
	for (int i = 0; i < params_.n; ++i)
		r.set(i, reduce_exponent(m[i]));
	return r;
}

std::size_t QuotientRing::index_of(Monomial const &canonical) const
{
	unsigned base = params_.p + params_.q;
	std::size_t idx = 0;
	for (int i = params_.n - 1; i >= 0; --i)
	{
		if (canonical[i] >= base)
			throw DomainError("monomial is not canonical");
		idx = idx * base + canonical[i];
	}
	return idx;
}

QPoly QuotientRing::zero() const { return QPoly(shared_from_this()); }

QPoly QuotientRing::one() const { return from_integer(1); }

QPoly QuotientRing::from_integer(Integer const &c) const
{
	QPoly r(shared_from_this());
	r.coefficients()[0] = static_cast<std::uint32_t>(mod_u64(c, params_.m));
	return r;
}

QPoly QuotientRing::variable(int i) const
{
	QPoly r(shared_from_this());
	r.coefficients()[variable_index_.at(i)] = 1 % params_.m;
	return r;
}

QPoly QuotientRing::add(QPoly const &a, QPoly const &b) const { return a + b; }
QPoly QuotientRing::mul(QPoly const &a, QPoly const &b) const { return a * b; }

void QuotientRing::mul_accumulate(std::span<std::uint32_t const> a,
                                  std::span<std::uint32_t const> b,
                                  std::span<std::uint32_t> out) const
{
	std::uint64_t const m = params_.m;
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (a[i] == 0)
			continue;
		std::uint32_t const *row = &product_[i * dim_];
		for (std::size_t j = 0; j < dim_; ++j)
		{
			if (b[j] == 0)
				continue;
			auto &o = out[row[j]];
			o = static_cast<std::uint32_t>((o + std::uint64_t(a[i]) * b[j]) % m);
		}
	}
}

// ---------------------------------------------------------------------------

QPoly::QPoly(QuotientRingPtr ring) : ring_(std::move(ring)), c_(ring_->dimension(), 0) {}

QPoly::QPoly(QuotientRingPtr ring, std::vector<std::uint32_t> coefficients)
    : ring_(std::move(ring)), c_(std::move(coefficients))
{
	if (c_.size() != ring_->dimension())
		throw DimensionError("coefficient vector has the wrong length");
	for (auto &c : c_)
		c %= ring_->modulus();
}

void QPoly::check_ring(QPoly const &b) const
{
	if (ring_ != b.ring_ && !(ring_->params() == b.ring_->params()))
		throw DimensionError("quotient ring elements from different rings");
}

std::vector<std::pair<Monomial, std::uint32_t>> QPoly::terms() const
{
	std::vector<std::pair<Monomial, std::uint32_t>> r;
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (c_[i] != 0)
			r.emplace_back(ring_->monomial_at(i), c_[i]);
	return r;
}

bool QPoly::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](auto c) { return c == 0; });
}

QPoly &QPoly::operator+=(QPoly const &b)
{
	check_ring(b);
	auto m = ring_->modulus();
	for (std::size_t i = 0; i < c_.size(); ++i)
		c_[i] = (c_[i] + b.c_[i]) % m;
	return *this;
}

QPoly &QPoly::operator-=(QPoly const &b)
{
	check_ring(b);
	auto m = ring_->modulus();
	for (std::size_t i = 0; i < c_.size(); ++i)
		c_[i] = (c_[i] + m - b.c_[i]) % m;
	return *this;
}

QPoly &QPoly::operator*=(std::uint64_t c)
{
	auto m = ring_->modulus();
	c %= m;
	for (auto &x : c_)
		x = static_cast<std::uint32_t>(x * c % m);
	return *this;
}

QPoly operator*(QPoly const &a, QPoly const &b)
{
	a.check_ring(b);
	QPoly r(a.ring_);
	a.ring_->mul_accumulate(a.c_, b.c_, r.c_);
	return r;
}

QPoly operator-(QPoly a)
{
	auto m = a.ring_->modulus();
	for (auto &x : a.c_)
		x = (m - x) % m;
	return a;
}

bool operator==(QPoly const &a, QPoly const &b)
{
	if (a.ring_ != b.ring_ && !(a.ring_->params() == b.ring_->params()))
		return false;
	return a.c_ == b.c_;
}

QPoly reduce_pqm(Poly const &a, QuotientRingPtr const &ring)
{
	if (a.n() != ring->n())
		throw DimensionError("reduce_pqm: generator counts differ");
	QPoly r(ring);
	auto m = ring->modulus();
	auto coeffs = r.coefficients();
	for (auto const &[mono, c] : a.terms())
	{
		auto idx = ring->index_of(ring->reduce_monomial(mono));
		coeffs[idx] = static_cast<std::uint32_t>((coeffs[idx] + mod_u64(c, m)) % m);
	}
	return r;
}

std::string format(QPoly const &a)
{
	std::vector<Poly::Term> terms;
	for (auto const &[mono, c] : a.terms())
		terms.emplace_back(mono, Integer(static_cast<unsigned long>(c)));
	return format(Poly::from_terms(a.ring().n(), std::move(terms)));
}

bool ideal_contains_finite(std::span<QPoly const> gens, QPoly const &target,
                           FiniteIdealLimits const &limits)
{
	auto const &ring = target.ring();
	if (ring.log2_cardinality() > limits.max_ring_log2)
		throw BudgetExceeded(fmt::format(
		    "quotient ring of size 2^{:.1f} exceeds the configured bound 2^{}",
		    ring.log2_cardinality(), limits.max_ring_log2));
	for (auto const &g : gens)
		if (!(g.ring().params() == ring.params()))
			throw DimensionError("ideal generators live in a different quotient ring");

	std::size_t const dim = ring.dimension();
	ModMatrix span(ring.modulus(), gens.size() * dim, dim);
	std::size_t row = 0;
	std::vector<std::uint32_t> mono(dim), prod(dim);
	for (auto const &g : gens)
		for (std::size_t mu = 0; mu < dim; ++mu, ++row)
		{
			std::fill(mono.begin(), mono.end(), 0);
			std::fill(prod.begin(), prod.end(), 0);
			mono[mu] = 1;
			ring.mul_accumulate(g.coefficients(), mono, prod);
			for (std::size_t c = 0; c < dim; ++c)
				span.at(row, c) = prod[c];
		}
	if (span.rows == 0)
		return target.is_zero();

	ModSubgroup ideal(std::move(span));
	std::vector<std::uint64_t> t(target.coefficients().begin(), target.coefficients().end());
	return ideal.contains(t);
}

} // namespace metlie
