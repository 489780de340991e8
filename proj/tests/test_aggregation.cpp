#include <gtest/gtest.h>

#include <random>

#include "sgm/aggregation.hpp"
#include "sgm/oracle.hpp"
#include "test_util.hpp"

namespace sgm {
namespace {

const std::vector<PathDirection> kAllDirections = {{1, 0}, {0, 1}, {-1, 0}, {0, -1},
                                                   {1, 1}, {-1, 1}, {1, -1}, {-1, -1}};

SgmParams params_for(int D, int p1 = 7, int p2 = 84, PathSet paths = PathSet::Four)
{
	SgmParams p;
	p.disparities = D;
	p.p1 = p1;
	p.p2 = p2;
	p.paths = paths;
	return p;
}

bool is_path_start(const CostVolume& v, PathDirection r, int x, int y)
{
	const int px = x - r.rx;
	const int py = y - r.ry;
	return px < 0 || py < 0 || px >= v.width() || py >= v.height();
}

TEST(Aggregation, DirectionSets)
{
	EXPECT_EQ(path_directions(PathSet::Two), (std::vector<PathDirection>{{1, 0}, {0, 1}}));
	EXPECT_EQ(path_directions(PathSet::Four), (std::vector<PathDirection>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
	EXPECT_EQ(path_directions(PathSet::Eight), kAllDirections);
}

TEST(Aggregation, WorkedThreeByOneExample)
{
	// Hand evaluation: x=1: d0 = 4 + min(5, 1+1, 1+2) - 1 = 5, d1 = 4 + min(1, 5+1, 3) - 1 = 4;
	// x=2 (prev min 4): d0 = 0 + min(5, 4+1, 6) - 4 = 1, d1 = 3 + min(4, 5+1, 6) - 4 = 3.
	CostVolume mc(3, 1, 2);
	const int costs[3][2] = {{5, 1}, {4, 4}, {0, 3}};
	for (int x = 0; x < 3; ++x) {
		for (int d = 0; d < 2; ++d) {
			mc(x, 0, d) = static_cast<std::uint8_t>(costs[x][d]);
		}
	}
	const SgmParams p = params_for(2, 1, 2);
	const AggregatedVolume L = aggregate_path(mc, {1, 0}, p);
	const int expected[3][2] = {{5, 1}, {5, 4}, {1, 3}};
	for (int x = 0; x < 3; ++x) {
		for (int d = 0; d < 2; ++d) {
			EXPECT_EQ(L(x, 0, d), expected[x][d]) << "x=" << x << " d=" << d;
		}
	}
	EXPECT_EQ(oracle::sgm_path(mc, {1, 0}, p), L);
}

TEST(Aggregation, SingleDisparityIsIdentity)
{
	std::mt19937_64 rng(1);
	const CostVolume mc = test::random_cost(rng, 11, 7, 1);
	for (const auto r : kAllDirections) {
		EXPECT_EQ(aggregate_path(mc, r, params_for(1)), mc);
	}
}

TEST(Aggregation, PathStartsCopyMatchingCost)
{
	std::mt19937_64 rng(2);
	const CostVolume mc = test::random_cost(rng, 9, 6, 5);
	for (const auto r : kAllDirections) {
		const AggregatedVolume L = aggregate_path(mc, r, params_for(5));
		for (int y = 0; y < mc.height(); ++y) {
			for (int x = 0; x < mc.width(); ++x) {
				if (is_path_start(mc, r, x, y)) {
					for (int d = 0; d < 5; ++d) {
						EXPECT_EQ(L(x, y, d), mc(x, y, d));
					}
				}
			}
		}
	}
}

TEST(Aggregation, ConstantCostStaysConstant)
{
	for (int c : {0, 13, 31}) {
		const CostVolume mc(10, 8, 6, static_cast<std::uint8_t>(c));
		for (const auto r : kAllDirections) {
			EXPECT_EQ(aggregate_path(mc, r, params_for(6)), mc);
		}
	}
}

TEST(Aggregation, MatchesOracleAllDirections)
{
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 25; ++trial) {
		const int w = std::uniform_int_distribution<int>(1, 32)(rng);
		const int h = std::uniform_int_distribution<int>(1, 24)(rng);
		const int D = std::uniform_int_distribution<int>(1, 16)(rng);
		const CostVolume mc = test::random_cost(rng, w, h, D);
		const SgmParams p = test::random_params(rng, D, PathSet::Eight);
		for (const auto r : kAllDirections) {
			ASSERT_EQ(aggregate_path(mc, r, p), oracle::sgm_path(mc, r, p))
			    << w << "x" << h << " D=" << D << " r=(" << r.rx << "," << r.ry << ")";
		}
	}
}

TEST(Aggregation, SandwichBoundAtExtremes)
{
	// Worst case for overflow: MC up to 31 with the largest allowed P2.
	std::mt19937_64 rng(4);
	const CostVolume mc = test::random_cost(rng, 23, 19, 12);
	const SgmParams p = params_for(12, 1, 224);
	for (const auto r : kAllDirections) {
		const AggregatedVolume L = aggregate_path(mc, r, p);
		for (std::size_t i = 0; i < mc.size(); ++i) {
			ASSERT_GE(L.data()[i], mc.data()[i]);
			ASSERT_LE(L.data()[i], mc.data()[i] + p.p2);
		}
	}
}

TEST(Aggregation, AggregateAllIsComposition)
{
	std::mt19937_64 rng(5);
	const CostVolume mc = test::random_cost(rng, 16, 12, 8);
	const SgmParams p = test::random_params(rng, 8, PathSet::Four);
	const auto all = aggregate_all(mc, p);
	const auto dirs = path_directions(PathSet::Four);
	ASSERT_EQ(all.size(), 4u);
	for (std::size_t i = 0; i < dirs.size(); ++i) {
		EXPECT_EQ(all[i], aggregate_path(mc, dirs[i], p));
	}

	SgmParams two = p;
	two.paths = PathSet::Two;
	const auto pair = aggregate_all(mc, two);
	ASSERT_EQ(pair.size(), 2u);
	EXPECT_EQ(pair[0], aggregate_path(mc, {1, 0}, p));
	EXPECT_EQ(pair[1], aggregate_path(mc, {0, 1}, p));
}

TEST(Aggregation, OnePixelImageEveryVolumeIsMatchingCost)
{
	std::mt19937_64 rng(6);
	const CostVolume mc = test::random_cost(rng, 1, 1, 9);
	for (const auto& v : aggregate_all(mc, params_for(9, 7, 84, PathSet::Eight))) {
		EXPECT_EQ(v, mc);
	}
}

TEST(Aggregation, FusedCostMatchesMaterialized)
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 10; ++trial) {
		const int w = std::uniform_int_distribution<int>(1, 30)(rng);
		const int h = std::uniform_int_distribution<int>(1, 20)(rng);
		const int D = std::uniform_int_distribution<int>(1, 20)(rng);
		const CensusImage a = test::random_census(rng, w, h);
		const CensusImage b = test::random_census(rng, w, h);
		const SgmParams p = test::random_params(rng, D, PathSet::Eight);
		const CostVolume mc = matching_cost(a, b, D);
		for (const auto r : kAllDirections) {
			ASSERT_EQ(aggregate_path_fused(a, b, r, p), aggregate_path(mc, r, p));
		}
	}
}

TEST(Aggregation, IdenticalAcrossWorkerCounts)
{
	std::mt19937_64 rng(8);
	const CostVolume mc = test::random_cost(rng, 53, 37, 16);
	const SgmParams p = params_for(16);
	WorkerPool two(2);
	WorkerPool eight(8);
	for (const auto r : kAllDirections) {
		const AggregatedVolume serial = aggregate_path(mc, r, p);
		EXPECT_EQ(aggregate_path(mc, r, p, &two), serial);
		EXPECT_EQ(aggregate_path(mc, r, p, &eight), serial);
	}
}

TEST(Aggregation, RejectsBadInputs)
{
	const CostVolume mc(4, 4, 8);
	EXPECT_THROW(aggregate_path(mc, {0, 0}, params_for(8)), std::invalid_argument);
	EXPECT_THROW(aggregate_path(mc, {2, 0}, params_for(8)), std::invalid_argument);
	EXPECT_THROW(aggregate_path(mc, {1, 0}, params_for(4)), std::invalid_argument);
	EXPECT_THROW(aggregate_path(mc, {1, 0}, params_for(8, 10, 5)), std::invalid_argument);
}

} // namespace
} // namespace sgm
