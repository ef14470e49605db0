#include "metlie/poly.hpp"

#include "lexer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace metlie {

namespace {

bool term_greater(Poly::Term const &a, Poly::Term const &b)
{
	return grevlex_less(b.first, a.first);
}

} // namespace

Poly Poly::constant(int n, Integer const &c)
{
	Poly p(n);
	if (c != 0)
		p.terms_.emplace_back(Monomial(n), c);
	return p;
}

Poly Poly::variable(int n, int i)
{
	Poly p(n);
	p.terms_.emplace_back(Monomial::variable(n, i), 1);
	return p;
}

Poly Poly::term(Integer const &c, Monomial const &m)
{
	Poly p(m.n());
	if (c != 0)
		p.terms_.emplace_back(m, c);
	return p;
}

Poly Poly::from_terms(int n, std::vector<Term> terms)
{
	std::map<Monomial, Integer, GrevlexGreater> acc;
	for (auto &[m, c] : terms)
	{
		if (m.n() != n)
			throw DimensionError("term over a different generator count");
		acc[m] += c;
	}
	Poly p(n);
	for (auto &[m, c] : acc)
		if (c != 0)
			p.terms_.emplace_back(m, std::move(c));
	return p;
}

unsigned Poly::total_degree() const
{
	unsigned d = 0;
	for (auto const &t : terms_)
		d = std::max(d, t.first.degree());
	return d;
}

Integer Poly::constant_term() const
{
	if (!terms_.empty() && terms_.back().first.is_one())
		return terms_.back().second;
	return 0;
}

bool Poly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Integer Poly::coefficient(Monomial const &m) const
{
	auto it = std::lower_bound(terms_.begin(), terms_.end(), Term(m, 0), term_greater);
	if (it != terms_.end() && it->first == m)
		return it->second;
	return 0;
}

Integer Poly::content() const
{
	Integer g = 0;
	for (auto const &t : terms_)
		g = gcd(g, t.second);
	return g;
}

void Poly::check_same_n(Poly const &b) const
{
	if (n_ != b.n_)
		throw DimensionError(
		    fmt::format("polynomials over {} and {} generators", n_, b.n_));
}

Poly Poly::combine(Poly const &b, bool subtract) const
{
	check_same_n(b);
	Poly r(n_);
	r.terms_.reserve(terms_.size() + b.terms_.size());
	auto i = terms_.begin();
	auto j = b.terms_.begin();
	while (i != terms_.end() || j != b.terms_.end())
	{
		if (j == b.terms_.end() || (i != terms_.end() && term_greater(*i, *j)))
		{
			r.terms_.push_back(*i++);
		}
		else if (i == terms_.end() || term_greater(*j, *i))
		{
			r.terms_.emplace_back(j->first, subtract ? Integer(-j->second) : j->second);
			++j;
		}
		else
		{
			Integer c = subtract ? Integer(i->second - j->second)
			                     : Integer(i->second + j->second);
			if (c != 0)
				r.terms_.emplace_back(i->first, std::move(c));
			++i;
			++j;
		}
	}
	return r;
}

Poly &Poly::operator+=(Poly const &b) { return *this = combine(b, false); }
Poly &Poly::operator-=(Poly const &b) { return *this = combine(b, true); }

Poly &Poly::operator*=(Integer const &c)
{
	if (c == 0)
	{
		terms_.clear();
		return *this;
	}
	for (auto &t : terms_)
		t.second *= c;
	return *this;
}

Poly &Poly::operator*=(Poly const &b) { return *this = *this * b; }

Poly operator*(Poly const &a, Poly const &b)
{
	a.check_same_n(b);
	if (a.is_zero() || b.is_zero())
		return Poly(a.n_);
	if (b.terms_.size() == 1)
		return a.mul_term(b.terms_[0].second, b.terms_[0].first);
	if (a.terms_.size() == 1)
		return b.mul_term(a.terms_[0].second, a.terms_[0].first);

	std::map<Monomial, Integer, GrevlexGreater> acc;
	Integer prod;
	for (auto const &[ma, ca] : a.terms_)
		for (auto const &[mb, cb] : b.terms_)
		{
			prod = ca * cb;
			acc[ma * mb] += prod;
		}
	Poly r(a.n_);
	r.terms_.reserve(acc.size());
	for (auto &[m, c] : acc)
		if (c != 0)
			r.terms_.emplace_back(m, std::move(c));
	return r;
}

Poly operator-(Poly a)
{
	for (auto &t : a.terms_)
		t.second = -t.second;
	return a;
}

Poly Poly::mul_term(Integer const &c, Monomial const &m) const
{
	Poly r(n_);
	if (c == 0)
		return r;
	r.terms_.reserve(terms_.size());
	// multiplication by a monomial preserves the term order
	for (auto const &t : terms_)
		r.terms_.emplace_back(t.first * m, t.second * c);
	return r;
}

Poly exact_divide(Poly const &a, Poly const &b)
{
	if (b.is_zero())
		throw DomainError("division by the zero polynomial");
	if (a.n() != b.n())
		throw DimensionError("exact_divide: generator counts differ");
	Poly rest = a;
	std::vector<Poly::Term> quotient;
	auto const &lm = b.leading_monomial();
	auto const &lc = b.leading_coefficient();
	while (!rest.is_zero())
	{
		auto const &[m, c] = rest.leading_term();
		if (!lm.divides(m) || !divides(lc, c))
			throw DomainError("exact_divide: divisor does not divide");
		Integer q = c / lc;
		Monomial qm = m / lm;
		rest -= b.mul_term(q, qm);
		quotient.emplace_back(qm, std::move(q));
	}
	return Poly::from_terms(a.n(), std::move(quotient));
}

Poly pow(Poly const &a, unsigned e)
{
	Poly r = Poly::constant(a.n(), 1);
	Poly base = a;
	while (e != 0)
	{
		if (e & 1)
			r *= base;
		e >>= 1;
		if (e != 0)
			base *= base;
	}
	return r;
}

namespace {

std::string format_monomial(Monomial const &m)
{
	std::string s;
	for (int i = 0; i < m.n(); ++i)
	{
		if (m[i] == 0)
			continue;
		if (!s.empty())
			s += '*';
		s += fmt::format("x{}", i + 1);
		if (m[i] > 1)
			s += fmt::format("^{}", m[i]);
	}
	return s;
}

} // namespace

std::string format(Poly const &p)
{
	if (p.is_zero())
		return "0";
	std::vector<Poly::Term const *> order;
	for (auto const &t : p.terms())
		order.push_back(&t);
	std::sort(order.begin(), order.end(), [](auto *a, auto *b) {
		return grlex_less(b->first, a->first);
	});

	std::string s;
	bool first = true;
	for (auto const *t : order)
	{
		Integer c = t->second;
		bool negative = c < 0;
		if (negative)
			c = -c;
		if (first)
			s += negative ? "-" : "";
		else
			s += negative ? " - " : " + ";
		first = false;
		if (t->first.is_one())
			s += c.get_str();
		else
		{
			if (c != 1)
				s += c.get_str() + "*";
			s += format_monomial(t->first);
		}
	}
	return s;
}

namespace {

using detail::Lexer;
using detail::Tok;

class PolyParser
{
  public:
	PolyParser(std::string_view text, int n) : lex_(text), n_(n) {}

	Poly parse()
	{
		Poly p = expr();
		if (lex_.peek().kind != Tok::end)
			lex_.fail("unexpected trailing input", lex_.peek());
		return p;
	}

  private:
	Poly expr()
	{
		bool negate = false;
		if (lex_.peek().kind == Tok::minus)
		{
			lex_.take();
			negate = true;
		}
		Poly acc = term();
		if (negate)
			acc = -acc;
		while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
		{
			bool minus = lex_.take().kind == Tok::minus;
			Poly t = term();
			if (minus)
				acc -= t;
			else
				acc += t;
		}
		return acc;
	}

	Poly term()
	{
		Poly acc = power();
		while (lex_.peek().kind == Tok::star)
		{
			lex_.take();
			acc *= power();
		}
		return acc;
	}

	Poly power()
	{
		Poly base = atom();
		if (lex_.peek().kind == Tok::caret)
		{
			lex_.take();
			auto e = lex_.expect(Tok::integer, "exponent");
			if (e.value > 1000)
				lex_.fail("exponent too large", e);
			base = pow(base, static_cast<unsigned>(e.value.get_ui()));
		}
		return base;
	}

	Poly atom()
	{
		auto const &t = lex_.peek();
		switch (t.kind)
		{
		case Tok::integer: return Poly::constant(n_, lex_.take().value);
		case Tok::generator:
		{
			auto g = lex_.take();
			if (g.index < 1 || g.index > n_)
				lex_.fail(fmt::format("generator x{} outside x1..x{}", g.index, n_), g);
			return Poly::variable(n_, g.index - 1);
		}
		case Tok::lparen:
		{
			lex_.take();
			Poly p = expr();
			lex_.expect(Tok::rparen, "')'");
			return p;
		}
		default: lex_.fail("expected a polynomial factor", t);
		}
	}

	Lexer lex_;
	int n_;
};

} // namespace

Poly parse_poly(std::string_view text, int n)
{
	if (n < 1 || n > kMaxVars)
		throw DomainError(fmt::format("generator count {} outside 1..{}", n, kMaxVars));
	return PolyParser(text, n).parse();
}

} // namespace metlie
