#include "metlie/primitivity.hpp"

#include <fmt/format.h>

#include <numeric>

namespace metlie {

std::string to_string(Verdict v)
{
	switch (v)
	{
	case Verdict::primitive: return "primitive";
	case Verdict::not_primitive: return "not-primitive";
	case Verdict::inconclusive: return "inconclusive";
	}
	return "?";
}

std::string to_string(DecisionMethod m)
{
	switch (m)
	{
	case DecisionMethod::groebner: return "groebner";
	case DecisionMethod::abelian_refuted: return "abelian-refuted";
	case DecisionMethod::quotient_refuted: return "quotient-refuted";
	}
	return "?";
}

std::string to_string(Refutation::Kind k)
{
	switch (k)
	{
	case Refutation::Kind::abelian: return "abelian";
	case Refutation::Kind::quotient: return "quotient";
	case Refutation::Kind::evaluation: return "evaluation";
	}
	return "?";
}

PrimitivityOptions PrimitivityOptions::defaults()
{
	PrimitivityOptions o;
	for (unsigned p : {1u, 2u})
		for (unsigned q : {1u, 2u})
			for (unsigned m : {2u, 3u})
				o.quotient_grid.push_back({p, q, m, 1});
	return o;
}

namespace {

bool next_combination(std::vector<std::size_t> &c, std::size_t n)
{
	std::size_t k = c.size();
	for (std::size_t i = k; i-- > 0;)
		if (c[i] < n - k + i)
		{
			++c[i];
			for (std::size_t j = i + 1; j < k; ++j)
				c[j] = c[j - 1] + 1;
			return true;
		}
	return false;
}

void check_system(std::span<MElement const> gs)
{
	if (gs.empty())
		throw DomainError("empty system");
	int n = gs[0].n;
	for (auto const &g : gs)
		if (g.n != n)
			throw DimensionError("system elements over different generator counts");
	if (gs.size() > static_cast<std::size_t>(n))
		throw DomainError(
		    fmt::format("a system of {} elements in {} generators cannot be primitive", gs.size(), n));
}

} // namespace

std::uint64_t smallest_prime_factor(Integer const &a)
{
	Integer v = abs(a);
	if (v < 2)
		return 0;
	for (std::uint64_t p = 2; p < 1000000; ++p)
	{
		if (Integer(static_cast<unsigned long>(p)) * p > v)
			break;
		if (mpz_divisible_ui_p(v.get_mpz_t(), p))
			return p;
	}
	return to_u64(v).value_or(0);
}

Integer abelian_minor_gcd(std::span<std::vector<Integer> const> rows)
{
	if (rows.empty())
		throw DomainError("empty system");
	std::size_t k = rows.size(), n = rows[0].size();
	if (k > n)
		throw DomainError(fmt::format("{} rows exceed {} columns", k, n));
	Integer g = 0;
	std::vector<std::size_t> cols(k);
	std::iota(cols.begin(), cols.end(), 0);
	do
	{
		std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
		for (std::size_t r = 0; r < k; ++r)
			for (std::size_t c = 0; c < k; ++c)
				sub[r][c] = rows[r][cols[c]];
		g = gcd(g, det_integer(std::move(sub)));
		if (g == 1)
			break;
	} while (next_combination(cols, n));
	return g;
}

bool abelian_primitive(std::span<std::vector<Integer> const> rows)
{
	return abelian_minor_gcd(rows) == 1;
}

std::vector<std::vector<Integer>> linear_parts(std::span<MElement const> gs)
{
	std::vector<std::vector<Integer>> rows;
	for (auto const &g : gs)
		rows.push_back(g.linear);
	return rows;
}

namespace {

bool finite_unit(std::span<Poly const> minors, QuotientParams params,
                 FiniteIdealLimits const &limits)
{
	auto ring = QuotientRing::make(params);
	std::vector<QPoly> reduced;
	for (auto const &m : minors)
	{
		auto r = reduce_pqm(m, ring);
		if (!r.is_zero())
			reduced.push_back(std::move(r));
	}
	return ideal_contains_finite(reduced, ring->one(), limits);
}

} // namespace

bool quotient_primitivity_check(std::span<MElement const> gs, QuotientParams params,
                                FiniteIdealLimits const &limits)
{
	check_system(gs);
	params.n = gs[0].n;
	auto ms = minors(jacobi_matrix(gs), gs.size());
	return finite_unit(ms, params, limits);
}

std::optional<VanishingPoint> find_vanishing_point(std::span<Poly const> polys,
                                                   std::uint64_t max_prime,
                                                   std::uint64_t max_points)
{
	if (polys.empty())
		return std::nullopt;
	int const n = polys[0].n();
	std::uint64_t visited = 0;
	for (std::uint64_t p = 2; p <= max_prime; ++p)
	{
		if (smallest_prime_factor(p) != p)
			continue;
		ModularRing ring{p};
		std::vector<std::uint64_t> point(n, 0);
		while (true)
		{
			if (++visited > max_points)
				return std::nullopt;
			bool all_zero = true;
			for (auto const &f : polys)
				if (evaluate(f, std::span<std::uint64_t const>(point), ring) != 0)
				{
					all_zero = false;
					break;
				}
			if (all_zero)
				return VanishingPoint{p, point};
			int i = 0;
			while (i < n && ++point[i] == p)
				point[i++] = 0;
			if (i == n)
				break;
		}
	}
	return std::nullopt;
}

PrimitivityVerdict is_primitive(std::span<MElement const> gs, PrimitivityOptions const &options)
{
	check_system(gs);
	int const n = gs[0].n;
	PrimitivityVerdict out;
	out.k = gs.size();

	auto rows = linear_parts(gs);
	Integer g = abelian_minor_gcd(rows);
	if (g != 1)
	{
		out.verdict = Verdict::not_primitive;
		out.method = DecisionMethod::abelian_refuted;
		Refutation r;
		r.kind = Refutation::Kind::abelian;
		r.minor_gcd = g;
		r.modulus = g == 0 ? 2 : smallest_prime_factor(g);
		out.refutation = r;
		out.minors = minors(jacobi_matrix(gs), gs.size());
		return out;
	}

	out.minors = minors(jacobi_matrix(gs), gs.size());

	for (auto params : options.quotient_grid)
	{
		params.n = n;
		bool unit;
		try
		{
			unit = finite_unit(out.minors, params, options.finite);
		}
		catch (BudgetExceeded const &)
		{
			continue;
		}
		if (!unit)
		{
			out.verdict = Verdict::not_primitive;
			out.method = DecisionMethod::quotient_refuted;
			Refutation r;
			r.kind = Refutation::Kind::quotient;
			r.params = params;
			if (options.search_vanishing_point)
				r.point = find_vanishing_point(out.minors, options.max_point_prime);
			out.refutation = r;
			return out;
		}
	}

	auto res = ideal_contains_one(out.minors, options.groebner);
	out.method = DecisionMethod::groebner;
	switch (res.answer)
	{
	case Membership::yes:
		out.verdict = Verdict::primitive;
		out.certificate = std::move(res.certificate);
		break;
	case Membership::no:
	{
		out.verdict = Verdict::not_primitive;
		if (options.search_vanishing_point)
			if (auto pt = find_vanishing_point(out.minors, options.max_point_prime))
			{
				Refutation r;
				r.kind = Refutation::Kind::evaluation;
				r.point = pt;
				out.refutation = r;
			}
		break;
	}
	case Membership::inconclusive:
		out.verdict = Verdict::inconclusive;
		out.note = res.note;
		break;
	}
	return out;
}

bool is_automorphism_system(std::span<MElement const> gs)
{
	if (gs.empty())
		throw DomainError("empty system");
	if (static_cast<int>(gs.size()) != gs[0].n)
		throw DomainError(fmt::format("an automorphism system needs exactly {} elements, got {}",
		                              gs[0].n, gs.size()));
	auto d = det(jacobi_matrix(gs));
	return d.is_constant() && abs(d.constant_term()) == 1;
}

} // namespace metlie
