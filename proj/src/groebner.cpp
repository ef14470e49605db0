#include "metlie/groebner.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <tuple>

namespace metlie {

namespace {

struct Elem
{
	Poly f;
	std::vector<Poly> cof; // f = Σ cof[t]·gens[t] when tracking
};

class Reducer
{
  public:
	Reducer(std::vector<Elem> const &basis, bool track) : basis_(basis), track_(track) {}

	/// Full reduction of h; the cofactors keep describing the returned polynomial.
	Elem reduce(Elem h) const
	{
		int const n = h.f.n();
		std::vector<Poly::Term> rem;
		while (!h.f.is_zero())
		{
			auto [mono, c] = h.f.leading_term();
			Elem const *exact = nullptr;
			Elem const *euclid = nullptr;
			for (auto const &g : basis_)
			{
				if (!g.f.leading_monomial().divides(mono))
					continue;
				auto const &lc = g.f.leading_coefficient();
				if (divides(lc, c))
				{
					exact = &g;
					break;
				}
				if (!euclid && (c < 0 || c >= lc))
					euclid = &g;
			}
			Elem const *use = exact ? exact : euclid;
			if (!use)
			{
				rem.emplace_back(mono, c);
				h.f -= Poly::term(c, mono);
				continue;
			}
			auto const &lc = use->f.leading_coefficient();
			Integer q;
			if (exact)
				q = c / lc;
			else
				mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
			Monomial shift = mono / use->f.leading_monomial();
			h.f -= use->f.mul_term(q, shift);
			if (track_)
				for (std::size_t t = 0; t < h.cof.size(); ++t)
					if (!use->cof[t].is_zero())
						h.cof[t] -= use->cof[t].mul_term(q, shift);
		}
		h.f = Poly::from_terms(n, std::move(rem));
		return h;
	}

  private:
	std::vector<Elem> const &basis_;
	bool track_;
};

void make_positive(Elem &e)
{
	if (!e.f.is_zero() && e.f.leading_coefficient() < 0)
	{
		e.f = -e.f;
		for (auto &c : e.cof)
			c = -c;
	}
}

Elem combine(Elem const &a, Integer const &ca, Monomial const &ma, Elem const &b,
             Integer const &cb, Monomial const &mb, bool track)
{
	Elem r;
	r.f = a.f.mul_term(ca, ma) + b.f.mul_term(cb, mb);
	if (track)
	{
		r.cof.reserve(a.cof.size());
		for (std::size_t t = 0; t < a.cof.size(); ++t)
			r.cof.push_back(a.cof[t].mul_term(ca, ma) + b.cof[t].mul_term(cb, mb));
	}
	return r;
}

struct SPair
{
	Elem s;
	std::optional<Elem> g;
};

/// S-polynomial (always) and G-polynomial (when neither leading
/// coefficient divides the other) of a pair.
SPair pair_polys(Elem const &a, Elem const &b, bool track, bool skip_coprime)
{
	auto const &ma = a.f.leading_monomial();
	auto const &mb = b.f.leading_monomial();
	auto const &ca = a.f.leading_coefficient();
	auto const &cb = b.f.leading_coefficient();
	Monomial l = lcm(ma, mb);
	Monomial ua = l / ma, ub = l / mb;

	SPair out;
	if (skip_coprime && coprime(ma, mb) && gcd(ca, cb) == 1)
		out.s.f = Poly(a.f.n());
	else
	{
		Integer lc = lcm(ca, cb);
		out.s = combine(a, Integer(lc / ca), ua, b, Integer(-(lc / cb)), ub, track);
	}
	if (!divides(ca, cb) && !divides(cb, ca))
	{
		auto bz = bezout(ca, cb);
		out.g = combine(a, bz.s, ua, b, bz.t, ub, track);
	}
	return out;
}

struct Completion
{
	std::vector<Elem> basis;
	std::optional<std::size_t> unit;
	GroebnerStats stats;
};

bool is_unit(Poly const &f)
{
	return f.is_constant() && !f.is_zero() && abs(f.constant_term()) == 1;
}

Completion complete(std::span<Poly const> gens, GroebnerLimits const &limits)
{
	if (gens.empty())
		throw DomainError("Gröbner basis of an empty generator list");
	int const n = gens[0].n();
	bool const track = limits.track_cofactors;
	Completion out;
	auto &basis = out.basis;

	// pairs ordered by (lcm in grevlex, newer index, older index)
	using Key = std::tuple<Monomial, std::size_t, std::size_t>;
	auto cmp = [](Key const &x, Key const &y) {
		auto const &[lx, jx, ix] = x;
		auto const &[ly, jy, iy] = y;
		if (!(lx == ly))
			return grevlex_less(lx, ly);
		return std::tie(jx, ix) < std::tie(jy, iy);
	};
	std::set<Key, decltype(cmp)> pairs(cmp);

	auto add = [&](Elem e) -> bool {
		make_positive(e);
		if (e.f.total_degree() > limits.max_degree)
			throw BudgetExceeded(fmt::format("Gröbner element of degree {} exceeds the cap {}",
			                                 e.f.total_degree(), limits.max_degree));
		if (basis.size() >= limits.max_basis_size)
			throw BudgetExceeded(
			    fmt::format("Gröbner basis exceeds the cap of {} elements", limits.max_basis_size));
		std::size_t j = basis.size();
		for (std::size_t i = 0; i < j; ++i)
			pairs.emplace(lcm(basis[i].f.leading_monomial(), e.f.leading_monomial()), j, i);
		basis.push_back(std::move(e));
		out.stats.max_basis_size = std::max(out.stats.max_basis_size, basis.size());
		if (is_unit(basis.back().f))
		{
			out.unit = j;
			return true;
		}
		return false;
	};

	Reducer reducer(basis, track);
	for (std::size_t t = 0; t < gens.size(); ++t)
	{
		if (gens[t].n() != n)
			throw DimensionError("Gröbner generators over different generator counts");
		Elem e{gens[t], {}};
		if (track)
		{
			e.cof.assign(gens.size(), Poly(n));
			e.cof[t] = Poly::constant(n, 1);
		}
		e = reducer.reduce(std::move(e));
		if (e.f.is_zero())
			continue;
		if (add(std::move(e)))
			return out;
	}

	while (!pairs.empty())
	{
		auto [l, j, i] = *pairs.begin();
		pairs.erase(pairs.begin());
		++out.stats.pairs_processed;
		auto sp = pair_polys(basis[i], basis[j], track, true);
		std::vector<Elem> todo;
		todo.push_back(std::move(sp.s));
		if (sp.g)
			todo.push_back(std::move(*sp.g));
		for (auto &h : todo)
		{
			if (h.f.is_zero())
				continue;
			h = reducer.reduce(std::move(h));
			if (h.f.is_zero())
			{
				++out.stats.reductions_to_zero;
				continue;
			}
			if (add(std::move(h)))
				return out;
		}
	}
	return out;
}

bool lt_divides(Poly const &a, Poly const &b)
{
	return a.leading_monomial().divides(b.leading_monomial()) &&
	       divides(a.leading_coefficient(), b.leading_coefficient());
}

} // namespace

bool GroebnerBasis::is_unit_ideal() const
{
	return std::any_of(elements_.begin(), elements_.end(),
	                   [](Poly const &f) { return is_unit(f); });
}

Poly GroebnerBasis::normal_form(Poly const &f) const
{
	std::vector<Elem> basis;
	for (auto const &g : elements_)
		basis.push_back({g, {}});
	return Reducer(basis, false).reduce({f, {}}).f;
}

GroebnerBasis groebner_z(std::span<Poly const> gens, GroebnerLimits const &limits)
{
	GroebnerLimits plain = limits;
	plain.track_cofactors = false;
	auto done = complete(gens, plain);
	int const n = gens[0].n();
	if (done.unit)
	{
		GroebnerBasis gb(n, {Poly::constant(n, 1)});
		gb.stats() = done.stats;
		return gb;
	}

	// minimize: drop elements whose leading term is divisible by another's
	std::vector<Poly> kept;
	auto &all = done.basis;
	for (std::size_t a = 0; a < all.size(); ++a)
	{
		bool redundant = false;
		for (std::size_t b = 0; b < all.size() && !redundant; ++b)
		{
			if (a == b || !lt_divides(all[b].f, all[a].f))
				continue;
			bool same = all[b].f.leading_term() == all[a].f.leading_term();
			redundant = !same || b < a;
		}
		if (!redundant)
			kept.push_back(all[a].f);
	}

	// tail reduction
	for (std::size_t a = 0; a < kept.size(); ++a)
	{
		std::vector<Elem> others;
		for (std::size_t b = 0; b < kept.size(); ++b)
			if (b != a)
				others.push_back({kept[b], {}});
		auto lt = Poly::term(kept[a].leading_coefficient(), kept[a].leading_monomial());
		auto tail = Reducer(others, false).reduce({kept[a] - lt, {}}).f;
		kept[a] = lt + tail;
	}
	std::sort(kept.begin(), kept.end(), [](Poly const &x, Poly const &y) {
		return grevlex_less(x.leading_monomial(), y.leading_monomial());
	});
	GroebnerBasis gb(n, std::move(kept));
	gb.stats() = done.stats;
	return gb;
}

bool UnitCertificate::verify(std::span<Poly const> gens) const
{
	if (gens.empty() || cofactors.size() != gens.size())
		return false;
	Poly sum(gens[0].n());
	for (std::size_t i = 0; i < gens.size(); ++i)
		sum += cofactors[i] * gens[i];
	return sum == Poly::constant(gens[0].n(), 1);
}

UnitIdealResult ideal_contains_one(std::span<Poly const> gens, GroebnerLimits limits)
{
	if (gens.empty())
		throw DomainError("ideal membership needs at least one generator");
	limits.track_cofactors = true;
	UnitIdealResult r;
	try
	{
		auto done = complete(gens, limits);
		r.basis_size = done.basis.size();
		if (!done.unit)
		{
			r.answer = Membership::no;
			return r;
		}
		UnitCertificate cert{done.basis[*done.unit].cof};
		if (!cert.verify(gens))
			throw Error("internal error: unit certificate does not verify");
		r.answer = Membership::yes;
		r.certificate = std::move(cert);
	}
	catch (BudgetExceeded const &e)
	{
		r.answer = Membership::inconclusive;
		r.note = e.what();
	}
	return r;
}

bool is_strong_groebner(std::span<Poly const> basis)
{
	std::vector<Elem> elems;
	for (auto const &g : basis)
		if (!g.is_zero())
			elems.push_back({g, {}});
	for (auto &e : elems)
		make_positive(e);
	Reducer reducer(elems, false);
	for (std::size_t j = 0; j < elems.size(); ++j)
		for (std::size_t i = 0; i < j; ++i)
		{
			auto sp = pair_polys(elems[i], elems[j], false, false);
			if (!reducer.reduce(std::move(sp.s)).f.is_zero())
				return false;
			if (sp.g && !reducer.reduce(std::move(*sp.g)).f.is_zero())
				return false;
		}
	return true;
}

} // namespace metlie
