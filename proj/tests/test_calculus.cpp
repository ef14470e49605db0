#include "metlie/calculus.hpp"
#include "metlie/groebner.hpp"
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

std::vector<MElement> system(std::initializer_list<std::string_view> texts, int n = 2)
{
	std::vector<MElement> out;
	for (auto t : texts)
		out.push_back(E(t, n));
	return out;
}

} // namespace

TEST(Jacobi, GeneratorsGiveIdentity)
{
	EXPECT_EQ(jacobi_matrix(system({"x1", "x2"})), PolyMatrix::identity(2, 2));
}

TEST(Jacobi, Columns)
{
	auto a = jacobi_matrix(system({"x1 + [x2,x1]"}));
	ASSERT_EQ(a.rows(), 2u);
	ASSERT_EQ(a.cols(), 1u);
	EXPECT_EQ(a(0, 0), P("1 - x2"));
	EXPECT_EQ(a(1, 0), P("x1"));
	auto b = jacobi_matrix(system({"x1 + [[x2,x1],x1]"}));
	EXPECT_EQ(b(0, 0), P("1 - x1*x2"));
	EXPECT_EQ(b(1, 0), P("x1^2"));
}

TEST(Jacobi, EmptySystem)
{
	EXPECT_THROW(jacobi_matrix(std::vector<MElement>{}), DomainError);
}

TEST(JacobiSubstituted, IdentitySubstitution)
{
	auto gs = system({"x1 + [[x2,x1],x1]", "[x2,x1] - x2"});
	EXPECT_EQ(jacobi_substituted(gs, identity_images(2)), jacobi_matrix(gs));
}

TEST(JacobiSubstituted, ZeroLinearParts)
{
	auto gs = system({"2*x1 + [[x2,x1],x1]", "x2 + [x2,x1]"});
	auto fs = system({"[x2,x1]", "0"});
	auto a = jacobi_substituted(gs, fs);
	auto lin = system({"2*x1", "x2"});
	EXPECT_EQ(a, jacobi_matrix(lin));
	EXPECT_THROW(jacobi_substituted(gs, system({"x1"})), DimensionError);
}

TEST(ChainRule, WorkedExample)
{
	auto y1 = system({"x1 + [x2,x1]", "x2"});
	auto y2 = system({"x2", "x1"});
	auto z = compose(y1, y2); // z_i = y1_i(y2)
	EXPECT_EQ(jacobi_matrix(z), jacobi_matrix(y2) * jacobi_substituted(y1, y2));
}

TEST(ChainRule, RandomEndomorphisms)
{
	RandomInputs rnd(73);
	for (int t = 0; t < 100; ++t)
	{
		int n = static_cast<int>(rnd.integer(2, 3));
		auto mu1 = rnd.endomorphism(n, 3, 3, 3);
		auto mu2 = rnd.endomorphism(n, 3, 3, 3);
		auto z = compose(mu1, mu2);
		ASSERT_EQ(jacobi_matrix(z), jacobi_matrix(mu2) * jacobi_substituted(mu1, mu2));
	}
}

TEST(Sigma, Examples)
{
	auto id = PolyMatrix::identity(3, 3);
	for (std::size_t i = 0; i < 3; ++i)
		EXPECT_EQ(sigma(id, i + 1), Poly::variable(3, static_cast<int>(i)));
	auto gs = system({"3*x1 - x2 + [[x2,x1],x1]", "x2 + [x2,x1]"});
	auto a = jacobi_matrix(gs);
	for (std::size_t i = 0; i < 2; ++i)
		EXPECT_EQ(sigma(a, i + 1), gs[i].linear_poly());
	auto e = PolyMatrix::identity(2, 2);
	e(0, 1) = P("x1");
	EXPECT_EQ(sigma(e, 1), P("x1"));
	EXPECT_EQ(sigma(e, 2), P("x1^2 + x2"));
	EXPECT_THROW(sigma(e, 3), DomainError);
	EXPECT_THROW(sigma(jacobi_matrix(system({"x1"})), 1), DimensionError);
}

TEST(Sigma, VariablesLieInTheSigmaIdeal)
{
	RandomInputs rnd(79);
	for (int t = 0; t < 20; ++t)
	{
		int n = t % 2 ? 3 : 2;
		auto a = rnd.elementary_product(n, 3);
		std::vector<Poly> sigmas;
		for (int i = 1; i <= n; ++i)
			sigmas.push_back(sigma(a, i));
		auto gb = groebner_z(sigmas);
		for (int j = 0; j < n; ++j)
			ASSERT_TRUE(gb.contains(Poly::variable(n, j)));
	}
}

TEST(Minors, Examples)
{
	EXPECT_EQ(minors(PolyMatrix::identity(2, 2), 2), (std::vector<Poly>{P("1")}));
	auto a = jacobi_matrix(system({"x1 + [x2,x1]"}));
	EXPECT_EQ(minors(a, 1), (std::vector<Poly>{P("1 - x2"), P("x1")}));
	auto b = jacobi_matrix(system({"x1 + [[x2,x1],x1]", "x2"}));
	EXPECT_EQ(minors(b, 2), (std::vector<Poly>{P("1 - x1*x2")}));
	EXPECT_THROW(minors(b, 3), DomainError);
	EXPECT_THROW(minors(b, 0), DomainError);
}

TEST(Minors, OrderAndCount)
{
	auto gs = system({"x1 + [x2,x1]", "x2 + [x3,x1]"}, 3);
	auto ms = minors(jacobi_matrix(gs), 2);
	ASSERT_EQ(ms.size(), 3u); // C(3,2)·C(2,2)
	auto a = jacobi_matrix(gs);
	EXPECT_EQ(ms[0], a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
	EXPECT_EQ(ms[2], a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

TEST(Det, Examples)
{
	EXPECT_EQ(det(PolyMatrix::identity(3, 3)), P("1", 3));
	// the lower-left entry x1 does not cancel
	EXPECT_EQ(det(jacobi_matrix(system({"x1 + [x2,x1]", "x2"}))), P("1 - x2"));
	EXPECT_EQ(det(jacobi_matrix(system({"2*x1", "x2"}))), P("2"));
	EXPECT_THROW(det(jacobi_matrix(system({"x1"}))), DimensionError);
}

TEST(Det, ElementaryProductsAreUnimodular)
{
	RandomInputs rnd(83);
	for (int t = 0; t < 50; ++t)
	{
		int n = static_cast<int>(rnd.integer(2, 4));
		auto a = rnd.elementary_product(n, 4, 2, 2, 3);
		auto d = det(a);
		ASSERT_TRUE(d.is_constant());
		ASSERT_EQ(abs(d.constant_term()), 1);
	}
}

TEST(Det, BareissMatchesCofactor)
{
	RandomInputs rnd(89);
	for (int t = 0; t < 60; ++t)
	{
		int size = static_cast<int>(rnd.integer(1, 4));
		PolyMatrix a(2, size, size);
		for (int r = 0; r < size; ++r)
			for (int c = 0; c < size; ++c)
				a(r, c) = rnd.poly(2, 2, 3, 3);
		ASSERT_EQ(det_bareiss(a), det_cofactor(a));
	}
	std::vector<std::vector<Integer>> m{{2, 3, 1}, {4, 1, 5}, {0, 2, 2}};
	EXPECT_EQ(det_integer(m), -32);
}

TEST(Minors, RowOperationsPreserveTheIdeal)
{
	RandomInputs rnd(97);
	for (int t = 0; t < 8; ++t)
	{
		auto gs = std::vector<MElement>{rnd.element(2, 2, 3, 2)};
		auto a = jacobi_matrix(gs);
		PolyMatrix u = PolyMatrix::identity(2, 2);
		u(0, 1) = Poly::constant(2, rnd.integer(-3, 3));
		auto b = u * a;
		auto ga = groebner_z(minors(a, 1));
		auto gb = groebner_z(minors(b, 1));
		for (auto const &f : minors(b, 1))
			ASSERT_TRUE(ga.contains(f));
		for (auto const &f : minors(a, 1))
			ASSERT_TRUE(gb.contains(f));
	}
}
