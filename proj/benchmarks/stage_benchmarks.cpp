#include <benchmark/benchmark.h>

#include "sgm/aggregation.hpp"
#include "sgm/census.hpp"
#include "sgm/cost_volume.hpp"
#include "sgm/disparity.hpp"
#include "sgm/pipeline.hpp"
#include "sgm/synthetic.hpp"

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kDisparities = 128;

struct Scene {
	sgm::GrayImage left = sgm::make_textured_image(kWidth, kHeight, 1);
	sgm::GrayImage right = sgm::make_shifted_view(left, 10, 2);
};

const Scene& scene()
{
	static const Scene s;
	return s;
}

sgm::SgmParams params(sgm::PathSet paths = sgm::PathSet::Four)
{
	sgm::SgmParams p;
	p.disparities = kDisparities;
	p.paths = paths;
	return p;
}

void set_pixels(benchmark::State& state)
{
	state.SetItemsProcessed(state.iterations() * kWidth * kHeight);
}

void BM_Census(benchmark::State& state)
{
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::census_transform(scene().left));
	}
	set_pixels(state);
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_MatchingCost(benchmark::State& state)
{
	const auto l = sgm::census_transform(scene().left);
	const auto r = sgm::census_transform(scene().right);
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::matching_cost(l, r, kDisparities));
	}
	set_pixels(state);
}
BENCHMARK(BM_MatchingCost)->Unit(benchmark::kMillisecond);

// Arg 0: direction index into the 8-path set.
void BM_AggregatePath(benchmark::State& state)
{
	const auto mc = sgm::matching_cost(sgm::census_transform(scene().left), sgm::census_transform(scene().right),
	                                   kDisparities);
	const auto dir = sgm::path_directions(sgm::PathSet::Eight)[static_cast<std::size_t>(state.range(0))];
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::aggregate_path(mc, dir, params()));
	}
	set_pixels(state);
}
BENCHMARK(BM_AggregatePath)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_AggregatePathFused(benchmark::State& state)
{
	const auto l = sgm::census_transform(scene().left);
	const auto r = sgm::census_transform(scene().right);
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::aggregate_path_fused(l, r, {1, 0}, params()));
	}
	set_pixels(state);
}
BENCHMARK(BM_AggregatePathFused)->Unit(benchmark::kMillisecond);

void BM_Select(benchmark::State& state)
{
	const auto mc = sgm::matching_cost(sgm::census_transform(scene().left), sgm::census_transform(scene().right),
	                                   kDisparities);
	const auto volumes = sgm::aggregate_all(mc, params());
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::select_disparity(volumes, params()));
	}
	set_pixels(state);
}
BENCHMARK(BM_Select)->Unit(benchmark::kMillisecond);

void BM_Median(benchmark::State& state)
{
	sgm::PipelineOptions opt;
	opt.params = params();
	opt.median = false;
	const auto raw = sgm::compute_disparity(scene().left, scene().right, opt);
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::median_filter_3x3(raw));
	}
	set_pixels(state);
}
BENCHMARK(BM_Median)->Unit(benchmark::kMillisecond);

// Args: path count, worker threads.
void BM_Pipeline(benchmark::State& state)
{
	sgm::PipelineOptions opt;
	opt.params = params(sgm::path_set_from_count(static_cast<int>(state.range(0))));
	sgm::WorkerPool pool(static_cast<unsigned>(state.range(1)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(sgm::compute_disparity(scene().left, scene().right, opt, &pool));
	}
	state.counters["fps"] = benchmark::Counter(static_cast<double>(state.iterations()), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Pipeline)
    ->ArgsProduct({{2, 4, 8}, {1, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

} // namespace

BENCHMARK_MAIN();
