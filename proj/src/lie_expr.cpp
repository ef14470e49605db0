#include "metlie/lie_expr.hpp"
#include "metlie/monomial.hpp"

#include "lexer.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace metlie {

LieExprPtr LieExpr::zero() { return std::make_shared<LieExpr const>(expr::Zero{}); }

LieExprPtr LieExpr::generator(int index)
{
	if (index < 1)
		throw DomainError(fmt::format("generator index {} must be positive", index));
	return std::make_shared<LieExpr const>(expr::Generator{index});
}

LieExprPtr LieExpr::bracket(Ptr left, Ptr right)
{
	return std::make_shared<LieExpr const>(expr::Bracket{std::move(left), std::move(right)});
}

LieExprPtr LieExpr::sum(std::vector<Ptr> terms)
{
	if (terms.empty())
		throw DomainError("a sum needs at least one term");
	return std::make_shared<LieExpr const>(expr::Sum{std::move(terms)});
}

LieExprPtr LieExpr::scalar(Integer c, Ptr operand)
{
	return std::make_shared<LieExpr const>(expr::ScalarMul{std::move(c), std::move(operand)});
}

int LieExpr::max_generator() const
{
	struct Visitor
	{
		int operator()(expr::Zero const &) const { return 0; }
		int operator()(expr::Generator const &g) const { return g.index; }
		int operator()(expr::Bracket const &b) const
		{
			return std::max(b.left->max_generator(), b.right->max_generator());
		}
		int operator()(expr::Sum const &s) const
		{
			int r = 0;
			for (auto const &t : s.terms)
				r = std::max(r, t->max_generator());
			return r;
		}
		int operator()(expr::ScalarMul const &m) const { return m.operand->max_generator(); }
	};
	return std::visit(Visitor{}, node_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using detail::Lexer;
using detail::Tok;

class LieParser
{
  public:
	LieParser(std::string_view text, int n) : lex_(text), n_(n) {}

	LieExprPtr parse()
	{
		auto e = expr();
		if (lex_.peek().kind != Tok::end)
			lex_.fail("unexpected trailing input", lex_.peek());
		return e;
	}

  private:
	static LieExprPtr negate(LieExprPtr t)
	{
		if (auto const *m = std::get_if<expr::ScalarMul>(&t->node()))
			return LieExpr::scalar(-m->coefficient, m->operand);
		return LieExpr::scalar(-1, std::move(t));
	}

	LieExprPtr expr()
	{
		std::vector<LieExprPtr> terms;
		bool negative = false;
		if (lex_.peek().kind == Tok::minus)
		{
			lex_.take();
			negative = true;
		}
		auto first = term();
		terms.push_back(negative ? negate(first) : first);
		while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
		{
			bool minus = lex_.take().kind == Tok::minus;
			auto t = term();
			terms.push_back(minus ? negate(t) : t);
		}
		if (terms.size() == 1)
			return terms.front();
		return LieExpr::sum(std::move(terms));
	}

	LieExprPtr term()
	{
		if (lex_.peek().kind == Tok::integer)
		{
			auto c = lex_.take();
			if (lex_.peek().kind != Tok::star)
			{
				if (c.value == 0)
					return LieExpr::zero();
				lex_.fail("a Lie polynomial has no constant terms; expected '*' after "
				          "the coefficient",
				          lex_.peek());
			}
			lex_.take();
			return LieExpr::scalar(c.value, factor());
		}
		return factor();
	}

	LieExprPtr factor()
	{
		auto const &t = lex_.peek();
		switch (t.kind)
		{
		case Tok::generator:
		{
			auto g = lex_.take();
			if (g.index < 1 || g.index > n_)
				lex_.fail(fmt::format("generator x{} outside x1..x{}", g.index, n_), g);
			return LieExpr::generator(g.index);
		}
		case Tok::lbracket:
		{
			lex_.take();
			auto left = expr();
			lex_.expect(Tok::comma, "','");
			auto right = expr();
			lex_.expect(Tok::rbracket, "']'");
			return LieExpr::bracket(std::move(left), std::move(right));
		}
		case Tok::lparen:
		{
			lex_.take();
			auto e = expr();
			lex_.expect(Tok::rparen, "')'");
			return e;
		}
		default: lex_.fail("expected a generator, '[' or '('", t);
		}
	}

	Lexer lex_;
	int n_;
};

/// A one-term sum and a unit multiple print as their operand.
LieExpr const &unwrap(LieExpr const &e)
{
	if (auto const *s = std::get_if<expr::Sum>(&e.node()); s && s->terms.size() == 1)
		return unwrap(*s->terms.front());
	if (auto const *m = std::get_if<expr::ScalarMul>(&e.node()); m && m->coefficient == 1)
		return unwrap(*m->operand);
	return e;
}

bool is_factor(LieExpr const &e)
{
	return std::holds_alternative<expr::Generator>(e.node()) ||
	       std::holds_alternative<expr::Bracket>(e.node());
}

std::string format_factor(LieExpr const &outer)
{
	auto const &e = unwrap(outer);
	if (is_factor(e))
		return format(e);
	return "(" + format(e) + ")";
}

/// Formats a summand; the sign is returned separately so sums read "a - b".
std::pair<bool, std::string> format_signed(LieExpr const &outer)
{
	auto const &e = unwrap(outer);
	if (auto const *m = std::get_if<expr::ScalarMul>(&e.node()))
	{
		// nested multiples fold into one coefficient
		Integer c = m->coefficient;
		LieExpr const *operand = &unwrap(*m->operand);
		while (auto const *inner = std::get_if<expr::ScalarMul>(&operand->node()))
		{
			c *= inner->coefficient;
			operand = &unwrap(*inner->operand);
		}
		bool negative = c < 0;
		if (negative)
			c = -c;
		if (c == 1)
			return {negative, format_factor(*operand)};
		return {negative, c.get_str() + "*" + format_factor(*operand)};
	}
	if (std::holds_alternative<expr::Sum>(e.node()))
		return {false, "(" + format(e) + ")"};
	return {false, format(e)};
}

} // namespace

LieExprPtr parse_lie(std::string_view text, int n)
{
	if (n < 1 || n > kMaxVars)
		throw DomainError(fmt::format("generator count {} outside 1..{}", n, kMaxVars));
	return LieParser(text, n).parse();
}

std::string format(LieExpr const &outer)
{
	auto const &e = unwrap(outer);
	struct Visitor
	{
		std::string operator()(expr::Zero const &) const { return "0"; }
		std::string operator()(expr::Generator const &g) const
		{
			return fmt::format("x{}", g.index);
		}
		std::string operator()(expr::Bracket const &b) const
		{
			return "[" + format(*b.left) + "," + format(*b.right) + "]";
		}
		std::string operator()(expr::Sum const &s) const
		{
			std::string out;
			bool first = true;
			for (auto const &t : s.terms)
			{
				auto [negative, body] = format_signed(*t);
				if (first)
					out += negative ? "-" : "";
				else
					out += negative ? " - " : " + ";
				out += body;
				first = false;
			}
			return out;
		}
		std::string operator()(expr::ScalarMul const &) const { return {}; }
	};
	if (std::holds_alternative<expr::ScalarMul>(e.node()))
	{
		auto [negative, body] = format_signed(e);
		return (negative ? "-" : "") + body;
	}
	return std::visit(Visitor{}, e.node());
}

} // namespace metlie
