#include "metlie/metlie.hpp"
#include "metlie/random.hpp"

#include <gtest/gtest.h>

using namespace metlie;

namespace {

MElement E(std::string_view s, int n = 2)
{
	return parse_element(s, n);
}

Poly P(std::string_view s, int n = 2)
{
	return parse_poly(s, n);
}

} // namespace

TEST(Generator, DerivativesAreKronecker)
{
	auto g = MElement::generator(1, 2);
	EXPECT_EQ(g.linear, (std::vector<Integer>{1, 0}));
	EXPECT_EQ(g.deriv[0], P("1"));
	EXPECT_TRUE(g.deriv[1].is_zero());
	EXPECT_EQ(g.linear_poly(), P("x1"));
	EXPECT_TRUE(g.satisfies_fundamental_identity());
}

TEST(Generator, RangeChecked)
{
	EXPECT_THROW(MElement::generator(3, 2), DomainError);
	EXPECT_THROW(MElement::generator(0, 2), DomainError);
}

TEST(Module, Operations)
{
	auto a = E("x1 + [[x2,x1],x1]");
	EXPECT_TRUE((a + Integer(-1) * a).is_zero());
	auto s = E("x1") + E("x2");
	EXPECT_EQ(s.linear, (std::vector<Integer>{1, 1}));
	EXPECT_EQ(s.deriv[0], P("1"));
	EXPECT_EQ(s.deriv[1], P("1"));
	auto d = Integer(2) * E("[x2,x1]");
	EXPECT_EQ(d.deriv[0], P("-2*x2"));
	EXPECT_EQ(d.deriv[1], P("2*x1"));
	EXPECT_THROW(E("x1", 1) + E("x1", 2), DimensionError);
}

TEST(Bracket, SimpleCommutator)
{
	auto b = bracket(E("x2"), E("x1"));
	EXPECT_EQ(b.deriv[0], P("-x2"));
	EXPECT_EQ(b.deriv[1], P("x1"));
	EXPECT_EQ(b.linear, (std::vector<Integer>{0, 0}));
}

TEST(Bracket, AlternatingAndMetabelian)
{
	auto g = E("3*x1 - x2 + [[x2,x1],x2]");
	EXPECT_TRUE(bracket(g, g).is_zero());
	EXPECT_TRUE(bracket(E("[x1,x2]"), E("[x2,x1]")).is_zero());
}

TEST(FromExpr, Examples)
{
	auto a = E("[x1,x2]");
	EXPECT_EQ(a.deriv[0], P("x2"));
	EXPECT_EQ(a.deriv[1], P("-x1"));
	auto b = E("[[x2,x1],x1]");
	EXPECT_EQ(b.deriv[0], P("-x1*x2"));
	EXPECT_EQ(b.deriv[1], P("x1^2"));
}

TEST(FromExpr, JacobiIdentityRearranged)
{
	// [x1,[x2,x3]] = [[x1,x2],x3] - [[x1,x3],x2]
	EXPECT_TRUE(E("[x1,[x2,x3]] - [[x1,x2],x3] + [[x1,x3],x2]", 3).is_zero());
	EXPECT_TRUE(E("[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]", 3).is_zero());
	// the combination with the opposite signs is not zero
	EXPECT_EQ(E("[x1,[x2,x3]] + [[x1,x2],x3] - [[x1,x3],x2]", 3),
	          E("-2*[[x2,x1],x3] + 2*[[x3,x1],x2]", 3));
}

TEST(ToBasis, Anticommutativity)
{
	auto b = to_basis(E("[x1,x2]"));
	ASSERT_EQ(b.terms.size(), 1u);
	EXPECT_EQ(b.terms[0].coefficient, -1);
	EXPECT_EQ(b.terms[0].word.indices, (std::vector<int>{2, 1}));
	EXPECT_EQ(b.linear, (std::vector<Integer>{0, 0}));
}

TEST(ToBasis, ThreeGenerators)
{
	auto a = E("[[x2,x3],x1]", 3);
	auto b = to_basis(a);
	ASSERT_EQ(b.terms.size(), 2u);
	EXPECT_EQ(b.terms[0].word.indices, (std::vector<int>{2, 1, 3}));
	EXPECT_EQ(b.terms[0].coefficient, 1);
	EXPECT_EQ(b.terms[1].word.indices, (std::vector<int>{3, 1, 2}));
	EXPECT_EQ(b.terms[1].coefficient, -1);
	EXPECT_EQ(format(a), "[[x2,x1],x3] - [[x3,x1],x2]");
	// the derivative vectors agree independently of to_basis
	EXPECT_EQ(a, E("[[x2,x1],x3]", 3) - E("[[x3,x1],x2]", 3));
}

TEST(ToBasis, Generator)
{
	auto b = to_basis(MElement::generator(1, 3));
	EXPECT_TRUE(b.terms.empty());
	EXPECT_EQ(b.linear, (std::vector<Integer>{1, 0, 0}));
}

TEST(ToBasis, RejectsBrokenIdentity)
{
	MElement bad(2);
	bad.deriv[0] = P("x2");
	EXPECT_FALSE(bad.satisfies_fundamental_identity());
	EXPECT_THROW(to_basis(bad), DomainError);
}

TEST(FromBasis, Examples)
{
	BasisExpansion b{{0, 0}, {{1, RightNormedWord{{2, 1}}}}};
	auto g = from_basis(b, 2);
	EXPECT_EQ(g.deriv[0], P("-x2"));
	EXPECT_EQ(g.deriv[1], P("x1"));
	EXPECT_TRUE(from_basis({{0, 0}, {}}, 2).is_zero());
	BasisExpansion invalid{{0, 0}, {{1, RightNormedWord{{1, 2}}}}};
	EXPECT_THROW(from_basis(invalid, 2), DomainError);
}

TEST(FromBasis, WordDerivativesMatchBracketRule)
{
	RandomInputs rnd(41);
	for (int t = 0; t < 300; ++t)
	{
		int n = static_cast<int>(rnd.integer(2, 4));
		auto w = rnd.basis_word(n, 6);
		auto e = bracket(MElement::generator(w.indices[0], n), MElement::generator(w.indices[1], n));
		for (std::size_t j = 2; j < w.indices.size(); ++j)
			e = bracket(e, MElement::generator(w.indices[j], n));
		ASSERT_EQ(word_derivatives(w, n), e.deriv);
	}
}

TEST(EndoApply, Identity)
{
	std::vector<MElement> ids{E("x1"), E("x2")};
	EXPECT_EQ(endo_apply(E("x1"), ids), E("x1"));
	EXPECT_EQ(endo_apply(*parse_lie("[[x2,x1],x1] + x2", 2), ids), E("[[x2,x1],x1] + x2"));
}

TEST(EndoApply, Substitution)
{
	std::vector<MElement> images{E("x1 + [x2,x1]"), E("x2")};
	EXPECT_EQ(endo_apply(E("[x2,x1]"), images), E("[x2,x1] - [[x2,x1],x2]"));
	EXPECT_EQ(endo_apply(E("[x2,x1]"), images), E("[x2,x1] + [x2,[x2,x1]]"));
}

TEST(EndoApply, LinearPartIsFunctorial)
{
	RandomInputs rnd(43);
	for (int t = 0; t < 200; ++t)
	{
		int n = static_cast<int>(rnd.integer(2, 3));
		auto g = rnd.element(n);
		auto images = rnd.endomorphism(n);
		auto h = endo_apply(g, images);
		for (int j = 0; j < n; ++j)
		{
			Integer expected = 0;
			for (int i = 0; i < n; ++i)
				expected += g.linear[i] * images[i].linear[j];
			ASSERT_EQ(h.linear[j], expected);
		}
	}
}

TEST(Properties, FundamentalIdentity)
{
	RandomInputs rnd(47);
	for (int t = 0; t < 1000; ++t)
	{
		int n = static_cast<int>(rnd.integer(1, 4));
		auto a = rnd.element(n), b = rnd.element(n);
		auto c = bracket(a, b) + Integer(3) * a - b;
		for (auto const *g : {&a, &b, &c})
		{
			Poly sum(n);
			for (int i = 0; i < n; ++i)
				sum += Poly::variable(n, i) * g->deriv[i];
			ASSERT_EQ(sum, g->linear_poly());
			for (int i = 0; i < n; ++i)
				ASSERT_EQ(g->deriv[i].constant_term(), g->linear[i]);
		}
	}
}

TEST(Properties, Anticommutativity)
{
	RandomInputs rnd(53);
	for (int t = 0; t < 10000; ++t)
	{
		auto a = rnd.element(3, 3, 3, 3), b = rnd.element(3, 3, 3, 3);
		ASSERT_TRUE((bracket(a, b) + bracket(b, a)).is_zero());
	}
}

TEST(Properties, JacobiIdentity)
{
	RandomInputs rnd(59);
	for (int t = 0; t < 10000; ++t)
	{
		auto a = rnd.element(3, 3, 3, 3), b = rnd.element(3, 3, 3, 3), c = rnd.element(3, 3, 3, 3);
		ASSERT_TRUE((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b))
		                .is_zero());
	}
}

TEST(Properties, MetabelianLaw)
{
	RandomInputs rnd(61);
	for (int t = 0; t < 2000; ++t)
	{
		auto a = rnd.element(3), b = rnd.element(3), c = rnd.element(3), d = rnd.element(3);
		ASSERT_TRUE(bracket(bracket(a, b), bracket(c, d)).is_zero());
	}
}

TEST(Properties, BasisRoundTrips)
{
	RandomInputs rnd(67);
	for (int t = 0; t < 500; ++t)
	{
		int n = static_cast<int>(rnd.integer(2, 4));
		auto b = rnd.basis_expansion(n, 6, 5, 5);
		ASSERT_EQ(to_basis(from_basis(b, n)), b);
		auto g = endo_apply(*rnd.expr(n, 4), identity_images(n));
		ASSERT_EQ(from_basis(to_basis(g), n), g);
	}
}

TEST(Properties, FromExprFactorsThroughLieIdentities)
{
	RandomInputs rnd(71);
	for (int t = 0; t < 500; ++t)
	{
		int n = 3;
		auto a = rnd.expr(n, 3), b = rnd.expr(n, 3), c = rnd.expr(n, 3), d = rnd.expr(n, 2);
		using L = LieExpr;
		// [a,b] versus -[b,a]
		auto e1 = L::bracket(a, b);
		auto e2 = L::scalar(-1, L::bracket(b, a));
		ASSERT_EQ(from_expr(*e1, n), from_expr(*e2, n));
		// [[a,b],c] versus -[[b,c],a] - [[c,a],b]
		auto j1 = L::bracket(L::bracket(a, b), c);
		auto j2 = L::sum({L::scalar(-1, L::bracket(L::bracket(b, c), a)),
		                  L::scalar(-1, L::bracket(L::bracket(c, a), b))});
		ASSERT_EQ(from_expr(*j1, n), from_expr(*j2, n));
		// d versus d + [[a,b],[c,d]]
		auto m2 = L::sum({d, L::bracket(L::bracket(a, b), L::bracket(c, d))});
		ASSERT_EQ(from_expr(*d, n), from_expr(*m2, n));
	}
}

TEST(Degenerate, OneGenerator)
{
	auto g = E("3*x1 + [x1,x1]", 1);
	EXPECT_EQ(format(g), "3*x1");
	EXPECT_TRUE(bracket(g, E("x1", 1)).is_zero());
	EXPECT_TRUE(to_basis(g).terms.empty());
}

TEST(Format, Printing)
{
	EXPECT_EQ(format(E("0")), "0");
	EXPECT_EQ(format(E("x2 + 2*x1 - [x1,x2] + [[x2,x1],x1]")), "2*x1 + x2 + [x2,x1] + [[x2,x1],x1]");
	EXPECT_EQ(format(E("-[[x2,x1],x2] - 3*[x2,x1]")), "-3*[x2,x1] - [[x2,x1],x2]");
}
