#include "metlie/finite_model.hpp"

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace metlie;

namespace {

std::vector<MElement> system(std::initializer_list<std::string_view> texts)
{
	std::vector<MElement> out;
	for (auto t : texts)
		out.push_back(parse_element(t, 2));
	return out;
}

// range(0): 0 = one element, 1 = pair
std::vector<MElement> workload(std::int64_t which)
{
	return which == 0 ? system({"x1 + [[x2,x1],x1]"}) : system({"x1 + [[x2,x1],x1]", "x2 + [x2,x1]"});
}

void run(benchmark::State &state, UniformityMethod method, int threads)
{
	FiniteModel model({{1, 1, 2, 2}, TopLeft::linear_only});
	auto gs = workload(state.range(0));
	UniformityOptions o;
	o.method = method;
	o.threads = threads;
	for (auto _ : state)
	{
		auto r = uniformity_check(gs, model, o);
		benchmark::DoNotOptimize(r.uniform);
	}
	state.counters["substitutions"] = benchmark::Counter(
	    static_cast<double>(state.iterations()) * 1024.0 * 1024.0, benchmark::Counter::kIsRate);
}

void BM_Serial(benchmark::State &state)
{
	run(state, UniformityMethod::serial, 1);
}

void BM_ExhaustiveOneThread(benchmark::State &state)
{
	run(state, UniformityMethod::exhaustive, 1);
}

void BM_ExhaustiveParallel(benchmark::State &state)
{
	run(state, UniformityMethod::exhaustive, 0);
}

void BM_Census(benchmark::State &state)
{
	run(state, UniformityMethod::census, 0);
}

void BM_CensusLargeModel(benchmark::State &state)
{
	FiniteModel model({{2, 2, 3, 2}, TopLeft::linear_only});
	auto gs = workload(state.range(0));
	UniformityOptions o;
	o.method = UniformityMethod::census;
	for (auto _ : state)
		benchmark::DoNotOptimize(uniformity_check(gs, model, o).uniform);
}

} // namespace

BENCHMARK(BM_Serial)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_ExhaustiveOneThread)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusLargeModel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
