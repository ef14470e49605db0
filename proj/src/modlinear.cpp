#include "metlie/modlinear.hpp"
#include "metlie/errors.hpp"

#include <algorithm>
#include <numeric>

namespace metlie {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

u64 mod_mul(u64 a, u64 b, u64 m) { return static_cast<u64>((unsigned __int128)a * b % m); }

/// Reduces a signed 128-bit value into [0, m).
u64 normalize(i128 v, u64 m)
{
	i128 r = v % static_cast<i128>(m);
	if (r < 0)
		r += m;
	return static_cast<u64>(r);
}

/// Replaces (x, y) by (s*x + t*y, u*x + v*y) entrywise, mod m.
void combine(u64 &x, u64 &y, std::int64_t s, std::int64_t t, std::int64_t u,
             std::int64_t v, u64 m)
{
	i128 nx = static_cast<i128>(s) * x + static_cast<i128>(t) * y;
	i128 ny = static_cast<i128>(u) * x + static_cast<i128>(v) * y;
	x = normalize(nx, m);
	y = normalize(ny, m);
}

/// Bézout data for (x, y) that is a pure elimination whenever x | y, so the
/// pivot only changes when it strictly decreases.
SmallBezout pivot_bezout(std::int64_t x, std::int64_t y)
{
	if (y % x == 0)
		return {x, 1, 0};
	return small_bezout(x, y);
}

struct Diagonalizer
{
	ModMatrix a;
	std::vector<u64> q; // cols x cols
	bool track_q;

	u64 &at(std::size_t r, std::size_t c) { return a.at(r, c); }

	void swap_rows(std::size_t r1, std::size_t r2)
	{
		if (r1 == r2)
			return;
		for (std::size_t c = 0; c < a.cols; ++c)
			std::swap(at(r1, c), at(r2, c));
	}

	void swap_cols(std::size_t c1, std::size_t c2)
	{
		if (c1 == c2)
			return;
		for (std::size_t r = 0; r < a.rows; ++r)
			std::swap(at(r, c1), at(r, c2));
		if (track_q)
			for (std::size_t r = 0; r < a.cols; ++r)
				std::swap(q[r * a.cols + c1], q[r * a.cols + c2]);
	}

	// Row Bézout: afterwards at(t,t) = gcd and at(i,t) = 0.
	void row_step(std::size_t t, std::size_t i)
	{
		auto x = static_cast<std::int64_t>(at(t, t));
		auto y = static_cast<std::int64_t>(at(i, t));
		auto bz = pivot_bezout(x, y);
		std::int64_t u = -y / bz.g, v = x / bz.g;
		for (std::size_t c = t; c < a.cols; ++c)
			combine(at(t, c), at(i, c), bz.s, bz.t, u, v, a.m);
	}

	void col_step(std::size_t t, std::size_t j)
	{
		auto x = static_cast<std::int64_t>(at(t, t));
		auto y = static_cast<std::int64_t>(at(t, j));
		auto bz = pivot_bezout(x, y);
		std::int64_t u = -y / bz.g, v = x / bz.g;
		for (std::size_t r = t; r < a.rows; ++r)
			combine(at(r, t), at(r, j), bz.s, bz.t, u, v, a.m);
		if (track_q)
			for (std::size_t r = 0; r < a.cols; ++r)
				combine(q[r * a.cols + t], q[r * a.cols + j], bz.s, bz.t, u, v, a.m);
	}

	/// Returns the diagonal entries for the leading rank columns.
	std::vector<u64> run()
	{
		std::size_t const rows = a.rows, cols = a.cols;
		std::vector<u64> diag;
		for (std::size_t t = 0; t < std::min(rows, cols); ++t)
		{
			// pivot: entry with the smallest gcd with m, first in scan order
			std::size_t pr = rows, pc = cols;
			u64 best = a.m;
			for (std::size_t r = t; r < rows && best != 1; ++r)
				for (std::size_t c = t; c < cols; ++c)
				{
					u64 v = at(r, c);
					if (v == 0)
						continue;
					u64 g = std::gcd(v, a.m);
					if (g < best)
					{
						best = g;
						pr = r;
						pc = c;
						if (g == 1)
							break;
					}
				}
			if (pr == rows)
				break;
			swap_rows(t, pr);
			swap_cols(t, pc);

			bool dirty = true;
			while (dirty)
			{
				dirty = false;
				for (std::size_t r = t + 1; r < rows; ++r)
					if (at(r, t) != 0)
						row_step(t, r);
				for (std::size_t c = t + 1; c < cols; ++c)
					if (at(t, c) != 0)
					{
						col_step(t, c);
						dirty = true;
					}
				if (dirty)
				{
					dirty = false;
					for (std::size_t r = t + 1; r < rows; ++r)
						if (at(r, t) != 0)
						{
							dirty = true;
							break;
						}
				}
			}
			diag.push_back(std::gcd(at(t, t), a.m));
		}
		return diag;
	}
};

} // namespace

ModSubgroup::ModSubgroup(ModMatrix generators)
    : m_(generators.m), n_(generators.cols)
{
	if (m_ < 2)
		throw DomainError("modulus must be at least 2");
	Diagonalizer d{std::move(generators), std::vector<u64>(n_ * n_, 0), true};
	for (std::size_t i = 0; i < n_; ++i)
		d.q[i * n_ + i] = 1;
	diag_ = d.run();
	q_ = std::move(d.q);
}

Integer ModSubgroup::order() const
{
	Integer r = 1;
	for (u64 g : diag_)
		r *= static_cast<unsigned long>(m_ / g);
	return r;
}

bool ModSubgroup::is_everything() const
{
	if (diag_.size() != n_)
		return false;
	return std::all_of(diag_.begin(), diag_.end(), [](u64 g) { return g == 1; });
}

bool ModSubgroup::contains(std::span<u64 const> v) const
{
	if (v.size() != n_)
		throw DimensionError("membership vector has the wrong length");
	for (std::size_t c = 0; c < n_; ++c)
	{
		u64 w = 0;
		for (std::size_t r = 0; r < n_; ++r)
			if (v[r] != 0)
				w = (w + mod_mul(v[r] % m_, q_[r * n_ + c], m_)) % m_;
		if (c < diag_.size())
		{
			if (w % diag_[c] != 0)
				return false;
		}
		else if (w != 0)
			return false;
	}
	return true;
}

ModMapOrders map_orders(ModMatrix const &a)
{
	Diagonalizer d{a, {}, false};
	auto diag = d.run();
	Integer image = 1;
	for (u64 g : diag)
		image *= static_cast<unsigned long>(a.m / g);
	Integer domain = pow_u64(a.m, a.rows);
	return {image, Integer(domain / image)};
}

} // namespace metlie
