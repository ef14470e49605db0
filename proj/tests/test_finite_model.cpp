#include "metlie/finite_model.hpp"
#include "metlie/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace metlie;

namespace {

FiniteModel model(unsigned p, unsigned q, unsigned m, int n, TopLeft t = TopLeft::linear_only)
{
	return FiniteModel({{p, q, m, n}, t});
}

std::vector<MElement> system(std::initializer_list<std::string_view> texts, int n = 2)
{
	std::vector<MElement> out;
	for (auto t : texts)
		out.push_back(parse_element(t, n));
	return out;
}

std::vector<QuotientParams> grid(int n)
{
	std::vector<QuotientParams> out;
	for (unsigned p : {1u, 2u})
		for (unsigned q : {1u, 2u})
			for (unsigned m : {2u, 3u})
				out.push_back({p, q, m, n});
	return out;
}

UniformityOptions with(UniformityMethod m)
{
	UniformityOptions o;
	o.method = m;
	return o;
}

} // namespace

TEST(Model, Sizes)
{
	EXPECT_EQ(model(1, 1, 2, 2).size(), 1024);
	EXPECT_EQ(model(1, 1, 2, 1).size(), 8);
	EXPECT_EQ(model(1, 1, 2, 1, TopLeft::full_ring).size(), 16);
	EXPECT_EQ(model(2, 2, 3, 2).top_left_count(), 9);
	EXPECT_EQ(model(2, 2, 3, 2, TopLeft::full_ring).top_left_count(), pow_u64(3, 16));
	EXPECT_NEAR(model(2, 2, 3, 2).log2_size(), (2 + 2 * 16) * std::log2(3.0), 1e-9);
}

TEST(Model, GeneratorImage)
{
	auto mdl = model(1, 1, 2, 2);
	auto g = mdl.generator(2);
	EXPECT_EQ(g.l, mdl.ring().variable(1));
	EXPECT_EQ(g.tau[0], mdl.ring().zero());
	EXPECT_EQ(g.tau[1], mdl.ring().one());
	EXPECT_THROW(mdl.generator(3), DomainError);
	EXPECT_EQ(mdl.format(mdl.generator(1)), "(x1 | 1, 0)");
}

TEST(Model, WorkedCommutator)
{
	auto mdl = model(1, 1, 2, 2);
	auto c = mdl.bracket(mdl.bracket(mdl.generator(2), mdl.generator(1)), mdl.generator(1));
	EXPECT_EQ(c.l, mdl.ring().zero());
	EXPECT_EQ(c.tau[0], reduce_pqm(parse_poly("x1*x2", 2), mdl.ring_ptr()));
	EXPECT_EQ(c.tau[1], mdl.ring().variable(0));
}

TEST(Model, TopLeftValidated)
{
	auto mdl = model(1, 1, 2, 2);
	EXPECT_FALSE(mdl.admissible_top_left(mdl.ring().one()));
	EXPECT_TRUE(model(1, 1, 2, 2, TopLeft::full_ring).admissible_top_left(mdl.ring().one()));
	ModelElement bad{mdl.ring().one(), {mdl.ring().zero(), mdl.ring().zero()}};
	EXPECT_THROW(mdl.add(bad, bad), DomainError);
}

TEST(Model, BracketMatchesMatrixCommutator)
{
	std::mt19937_64 rng(131);
	for (auto params : grid(2))
		for (auto t : {TopLeft::linear_only, TopLeft::full_ring})
		{
			FiniteModel mdl({params, t});
			for (int i = 0; i < 200; ++i)
			{
				auto a = mdl.random_element(rng), b = mdl.random_element(rng);
				auto ma = oracle::as_matrix(a, mdl.ring_ptr()), mb = oracle::as_matrix(b, mdl.ring_ptr());
				auto want = oracle::subtract(oracle::multiply(ma, mb), oracle::multiply(mb, ma));
				ASSERT_EQ(oracle::as_matrix(mdl.bracket(a, b), mdl.ring_ptr()), want);
			}
		}
}

TEST(Model, LieAxiomsOnGrid)
{
	std::mt19937_64 rng(137);
	for (int n : {1, 2})
		for (auto params : grid(n))
		{
			auto mdl = FiniteModel({params, TopLeft::linear_only});
			for (int i = 0; i < 10000 / 8; ++i)
			{
				auto a = mdl.random_element(rng), b = mdl.random_element(rng), c = mdl.random_element(rng),
				     d = mdl.random_element(rng);
				ASSERT_EQ(mdl.bracket(a, a), mdl.zero());
				ASSERT_EQ(mdl.add(mdl.bracket(a, b), mdl.bracket(b, a)), mdl.zero());
				auto jac = mdl.add(mdl.add(mdl.bracket(mdl.bracket(a, b), c), mdl.bracket(mdl.bracket(b, c), a)),
				                   mdl.bracket(mdl.bracket(c, a), b));
				ASSERT_EQ(jac, mdl.zero());
				ASSERT_EQ(mdl.bracket(mdl.bracket(a, b), mdl.bracket(c, d)), mdl.zero());
				ASSERT_EQ(mdl.bracket(mdl.add(a, b), c), mdl.add(mdl.bracket(a, c), mdl.bracket(b, c)));
			}
		}
}

TEST(Model, EncodeDecodeRoundTrip)
{
	std::mt19937_64 rng(139);
	for (auto t : {TopLeft::linear_only, TopLeft::full_ring})
	{
		auto mdl = model(2, 1, 3, 2, t);
		for (int i = 0; i < 500; ++i)
		{
			auto a = mdl.random_element(rng);
			auto idx = mdl.encode(a);
			ASSERT_GE(idx, 0);
			ASSERT_LT(idx, mdl.size());
			ASSERT_EQ(mdl.decode(idx), a);
		}
	}
	auto small = model(1, 1, 2, 1);
	for (unsigned long i = 0; i < 8; ++i)
		EXPECT_EQ(small.encode(small.decode(Integer(i))), Integer(i));
	EXPECT_THROW(small.decode(Integer(8)), DomainError);
}

TEST(ClosedForm, MatchesExpressionEvaluation)
{
	RandomInputs rnd(149);
	auto mdl = model(1, 1, 2, 2);
	for (int t = 0; t < 1000; ++t)
	{
		auto e = rnd.expr(2, 4);
		auto g = from_expr(*e, 2);
		std::vector<ModelElement> r{mdl.random_element(rnd.engine()), mdl.random_element(rnd.engine())};
		auto want = eval_in_ring(*e, std::span<ModelElement const>(r), mdl);
		ASSERT_EQ(eval_closed_form(g, r, mdl), want);
		ASSERT_EQ(eval_element(g, std::span<ModelElement const>(r), mdl), want);
	}
}

TEST(ClosedForm, OtherModels)
{
	RandomInputs rnd(151);
	for (auto params : {QuotientParams{2, 2, 3, 2}, QuotientParams{1, 2, 4, 3}})
	{
		FiniteModel mdl({params, TopLeft::full_ring});
		for (int t = 0; t < 200; ++t)
		{
			auto g = rnd.element(params.n, 4, 4, 4);
			std::vector<ModelElement> r;
			for (int i = 0; i < params.n; ++i)
				r.push_back(mdl.random_element(rnd.engine()));
			ASSERT_EQ(eval_closed_form(g, r, mdl), eval_element(g, std::span<ModelElement const>(r), mdl));
		}
	}
}

TEST(Uniformity, WorkedNonUniform)
{
	auto mdl = model(1, 1, 2, 2);
	auto r = uniformity_check(system({"x1 + [x2,x1]"}), mdl);
	EXPECT_FALSE(r.uniform);
	EXPECT_EQ(r.expected_fiber, 1024);
	EXPECT_EQ(r.total, Integer(1024) * 1024);
	ASSERT_TRUE(r.witness);
	EXPECT_NE(r.witness->fiber, r.expected_fiber);
}

TEST(Uniformity, WorkedUniform)
{
	auto mdl = model(1, 1, 2, 2);
	auto r = uniformity_check(system({"x1 + [[x2,x1],x1]"}), mdl);
	EXPECT_TRUE(r.uniform);
	EXPECT_EQ(r.fiber_min, Integer(1024));
	EXPECT_EQ(r.fiber_max, 1024);
	EXPECT_FALSE(r.witness);
}

TEST(Uniformity, AbelianModel)
{
	auto twice = uniformity_check_abelian(system({"2*x1"}), 2);
	EXPECT_FALSE(twice.uniform);
	EXPECT_EQ(twice.fiber_min, Integer(0));
	EXPECT_EQ(twice.fiber_max, 4);
	auto gen = uniformity_check_abelian(system({"x1 + [x2,x1]"}), 3);
	EXPECT_TRUE(gen.uniform);
	EXPECT_EQ(gen.expected_fiber, 3);
}

TEST(Uniformity, MethodsAgreeWithDirectEnumeration)
{
	RandomInputs rnd(157);
	for (auto params : grid(1))
	{
		FiniteModel mdl({params, TopLeft::linear_only});
		for (int t = 0; t < 4; ++t)
		{
			auto e = rnd.expr(1, 3);
			auto g = from_expr(*e, 1);
			auto hist = oracle::direct_fibers({e}, mdl);
			std::uint64_t lo = hist.size() == to_u64(mdl.size()).value() ? UINT64_MAX : 0, hi = 0;
			for (auto const &[key, count] : hist)
			{
				lo = std::min(lo, count);
				hi = std::max(hi, count);
			}
			std::vector<MElement> gs{g};
			for (auto method : {UniformityMethod::serial, UniformityMethod::exhaustive, UniformityMethod::census})
			{
				auto r = uniformity_check(gs, mdl, with(method));
				ASSERT_EQ(r.fiber_max, Integer(static_cast<unsigned long>(hi))) << to_string(method);
				ASSERT_TRUE(r.fiber_min);
				ASSERT_EQ(*r.fiber_min, Integer(static_cast<unsigned long>(lo))) << to_string(method);
				ASSERT_EQ(r.uniform, lo == hi);
			}
		}
	}
}

TEST(Uniformity, MethodsAgreeOnPairs)
{
	auto mdl = model(1, 1, 2, 2);
	for (auto gs : {system({"x1 + [x2,x1]"}), system({"x1 + [[x2,x1],x1]"}),
	                system({"x1 + [[x2,x1],x1]", "x2"}), system({"[x2,x1]", "x2"})})
	{
		auto ex = uniformity_check(gs, mdl, with(UniformityMethod::exhaustive));
		auto ce = uniformity_check(gs, mdl, with(UniformityMethod::census));
		EXPECT_EQ(ex.uniform, ce.uniform);
		EXPECT_EQ(ex.fiber_max, ce.fiber_max);
		if (ce.fiber_min)
			EXPECT_EQ(*ex.fiber_min, *ce.fiber_min);
	}
	auto gs = system({"x1 + [x2,x1]"});
	auto se = uniformity_check(gs, mdl, with(UniformityMethod::serial));
	auto ex = uniformity_check(gs, mdl, with(UniformityMethod::exhaustive));
	EXPECT_EQ(se.fiber_min, ex.fiber_min);
	EXPECT_EQ(se.fiber_max, ex.fiber_max);
	ASSERT_TRUE(se.witness && ex.witness);
	EXPECT_EQ(se.witness->index, ex.witness->index);
}

TEST(Uniformity, FiberConservation)
{
	RandomInputs rnd(163);
	for (auto params : {QuotientParams{1, 1, 2, 2}, QuotientParams{1, 1, 3, 1}, QuotientParams{2, 1, 2, 1}})
	{
		FiniteModel mdl({params, TopLeft::linear_only});
		for (int t = 0; t < 3; ++t)
		{
			auto gs = std::vector<MElement>{rnd.element(params.n, 3, 3, 3)};
			auto r = uniformity_check(gs, mdl);
			ASSERT_EQ(r.total, pow_u64(to_u64(mdl.size()).value(), params.n));
			ASSERT_EQ(r.expected_fiber * mdl.size(), r.total);
			ASSERT_LE(*r.fiber_min, r.expected_fiber);
			ASSERT_GE(r.fiber_max, r.expected_fiber);
		}
	}
}

TEST(Uniformity, AutomorphismsAreBijective)
{
	RandomInputs rnd(167);
	auto mdl = model(1, 1, 2, 2);
	for (int t = 0; t < 5; ++t)
	{
		auto phi = rnd.tame_automorphism(2, 3);
		auto r = uniformity_check(phi, mdl);
		EXPECT_TRUE(r.uniform);
		EXPECT_EQ(r.expected_fiber, 1);
		EXPECT_EQ(r.fiber_max, 1);
	}
}

TEST(Uniformity, InvariantUnderPermutingInputs)
{
	auto mdl = model(1, 1, 2, 2);
	for (auto texts : {std::pair{"x1 + [x2,x1]", "x2 + [x1,x2]"}, std::pair{"2*x1 + [[x2,x1],x2]", "2*x2 + [[x1,x2],x1]"}})
	{
		auto a = uniformity_check(system({texts.first}), mdl);
		auto b = uniformity_check(system({texts.second}), mdl);
		auto swapped = compose(system({texts.first}), system({"x2", "x1"}));
		auto c = uniformity_check(swapped, mdl);
		EXPECT_EQ(a.fiber_max, c.fiber_max);
		EXPECT_EQ(a.fiber_min, c.fiber_min);
		EXPECT_EQ(b.fiber_max, c.fiber_max);
		EXPECT_EQ(b.fiber_min, c.fiber_min);
	}
}

TEST(Uniformity, PostcomposingWithAutomorphisms)
{
	RandomInputs rnd(173);
	auto mdl = model(1, 1, 2, 2);
	for (auto gs : {system({"x1 + [x2,x1]"}), system({"x1 + [[x2,x1],x1]"}), system({"2*x1 + [x2,x1]"})})
	{
		auto base = uniformity_check(gs, mdl);
		for (int t = 0; t < 5; ++t)
		{
			auto moved = compose(gs, rnd.tame_automorphism(2, 3));
			auto r = uniformity_check(moved, mdl);
			ASSERT_EQ(r.uniform, base.uniform);
			ASSERT_EQ(r.fiber_max, base.fiber_max);
			ASSERT_EQ(r.fiber_min, base.fiber_min);
		}
	}
}

TEST(Uniformity, BudgetErrors)
{
	auto mdl = model(2, 2, 3, 2);
	UniformityOptions o = with(UniformityMethod::exhaustive);
	EXPECT_THROW(uniformity_check(system({"x1"}), mdl, o), BudgetExceeded);
	o.method = UniformityMethod::serial;
	o.budget = 100;
	EXPECT_THROW(uniformity_check(system({"x1"}), model(1, 1, 2, 2), o), BudgetExceeded);
	EXPECT_THROW(uniformity_check(system({"x1", "x2", "x1"}), model(1, 1, 2, 2)), DomainError);
}

TEST(Uniformity, LargeModelsUseCensus)
{
	auto r = uniformity_check(system({"x1 + [x2,x1]"}), model(2, 2, 3, 2));
	EXPECT_EQ(r.method, UniformityMethod::census);
	EXPECT_FALSE(r.uniform);
	auto u = uniformity_check(system({"x1 + [[x2,x1],x1]"}), model(2, 2, 3, 2));
	EXPECT_TRUE(u.uniform);
}

TEST(Witness, GridOrder)
{
	auto matrix = grid(2);
	std::vector<std::uint64_t> abelian{3, 2};
	auto g = order_grid(matrix, abelian, 2);
	ASSERT_EQ(g.size(), 10u);
	EXPECT_EQ(g[0].describe(), "Z_2");
	EXPECT_EQ(g[1].describe(), "Z_3");
	EXPECT_EQ(g[2].describe(), "M(p=1,q=1,m=2,linear)");
}

TEST(Witness, Examples)
{
	auto matrix = grid(2);
	std::vector<std::uint64_t> abelian{2, 3, 4};
	auto g = order_grid(matrix, abelian, 2);
	auto w = witness_search(system({"2*x1"}), g);
	ASSERT_TRUE(w.witness);
	EXPECT_EQ(w.witness->kind, "abelian");
	EXPECT_EQ(w.witness->abelian_modulus, 2u);

	auto c = witness_search(system({"x1 + [x2,x1]"}), g);
	ASSERT_TRUE(c.witness);
	EXPECT_EQ(c.witness->kind, "matrix");
	EXPECT_EQ(c.passed.size(), 3u);

	auto none = witness_search(system({"x1 + [[x2,x1],x1]"}), g);
	EXPECT_FALSE(none.witness);
	EXPECT_EQ(none.passed.size() + none.skipped.size(), g.size());
}
