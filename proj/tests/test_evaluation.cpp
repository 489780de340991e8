#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sgm/evaluation.hpp"

namespace sgm {
namespace {

DisparityMap random_map(std::mt19937_64& rng, int w, int h)
{
	DisparityMap m(w, h);
	for (auto& v : m.pixels()) {
		v = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, 127)(rng));
	}
	return m;
}

TEST(BadPixelRate, ExactMatchIsPerfect)
{
	std::mt19937_64 rng(1);
	const DisparityMap gt = random_map(rng, 10, 8);
	const EvalResult r = bad_pixel_rate(gt, gt);
	EXPECT_EQ(r.total, 80u);
	EXPECT_EQ(r.bad, 0u);
	EXPECT_DOUBLE_EQ(r.accuracy, 1.0);
	EXPECT_EQ(r.threshold, 3);
}

TEST(BadPixelRate, AllOffByThresholdPlusOne)
{
	const DisparityMap gt(6, 4, 20);
	const DisparityMap est(6, 4, 24);
	EXPECT_DOUBLE_EQ(bad_pixel_rate(est, gt, nullptr, 3).accuracy, 0.0);
	// Exactly at the threshold is not an error.
	EXPECT_DOUBLE_EQ(bad_pixel_rate(DisparityMap(6, 4, 23), gt, nullptr, 3).accuracy, 1.0);
}

TEST(BadPixelRate, HalfExactHalfOffByFive)
{
	const DisparityMap gt(4, 4, 30);
	DisparityMap est = gt;
	for (int y = 0; y < 2; ++y) {
		for (int x = 0; x < 4; ++x) {
			est(x, y) = 35;
		}
	}
	const EvalResult r = bad_pixel_rate(est, gt, nullptr, 3);
	EXPECT_EQ(r.total, 16u);
	EXPECT_EQ(r.bad, 8u);
	EXPECT_DOUBLE_EQ(r.accuracy, 0.5);
}

TEST(BadPixelRate, MaskSelectsPixels)
{
	const DisparityMap gt(4, 1, 10);
	DisparityMap est = gt;
	est(0, 0) = 50;
	EvalMask mask(4, 1, 1);
	mask(0, 0) = 0;
	const EvalResult r = bad_pixel_rate(est, gt, &mask);
	EXPECT_EQ(r.total, 3u);
	EXPECT_EQ(r.bad, 0u);

	const EvalMask empty(4, 1, 0);
	EXPECT_THROW(bad_pixel_rate(est, gt, &empty), std::invalid_argument);
}

TEST(BadPixelRate, Errors)
{
	EXPECT_THROW(bad_pixel_rate(DisparityMap(2, 2), DisparityMap(3, 2)), std::invalid_argument);
	EXPECT_THROW(bad_pixel_rate(DisparityMap(2, 2), DisparityMap(2, 2), nullptr, -1), std::invalid_argument);
	const EvalMask wrong(3, 3, 1);
	EXPECT_THROW(bad_pixel_rate(DisparityMap(2, 2), DisparityMap(2, 2), &wrong), std::invalid_argument);
}

TEST(BadPixelRate, SymmetricAndMonotoneInThreshold)
{
	std::mt19937_64 rng(2);
	for (int trial = 0; trial < 20; ++trial) {
		const DisparityMap a = random_map(rng, 9, 7);
		DisparityMap b = a;
		for (auto& v : b.pixels()) {
			v = static_cast<std::uint16_t>(std::max(0, v + std::uniform_int_distribution<int>(-8, 8)(rng)));
		}
		double previous = -1.0;
		for (int t = 0; t <= 10; ++t) {
			const EvalResult ab = bad_pixel_rate(a, b, nullptr, t);
			const EvalResult ba = bad_pixel_rate(b, a, nullptr, t);
			EXPECT_EQ(ab.bad, ba.bad);
			EXPECT_GE(ab.accuracy, previous);
			EXPECT_GE(ab.accuracy, 0.0);
			EXPECT_LE(ab.accuracy, 1.0);
			previous = ab.accuracy;
		}
	}
}

TEST(Depth, Triangulation)
{
	EXPECT_DOUBLE_EQ(disparity_to_depth(1.0, {1.0, 1.0}), 1.0);
	// 700 * 0.54 / 63 = 378 / 63 = 6.
	EXPECT_NEAR(disparity_to_depth(63.0, {700.0, 0.54}), 6.0, 1e-12);
	EXPECT_THROW(disparity_to_depth(0.0, {700.0, 0.54}), std::domain_error);
	EXPECT_THROW(disparity_to_depth(-1.0, {700.0, 0.54}), std::domain_error);
	EXPECT_THROW(disparity_to_depth(1.0, {0.0, 0.54}), std::invalid_argument);
	EXPECT_THROW(disparity_to_depth(1.0, {700.0, -1.0}), std::invalid_argument);
}

TEST(Depth, StrictlyDecreasingInDisparity)
{
	const CameraGeometry g{721.5, 0.5327};
	double previous = INFINITY;
	for (int d = 1; d <= 255; ++d) {
		const double z = disparity_to_depth(d, g);
		EXPECT_LT(z, previous);
		previous = z;
	}
}

TEST(MetricsCsv, ColumnOrder)
{
	SgmParams p;
	p.disparities = 64;
	p.paths = PathSet::Eight;
	p.p1 = 5;
	p.p2 = 90;
	EvalResult r;
	r.total = 200;
	r.bad = 50;
	r.accuracy = 0.75;
	r.threshold = 3;
	EXPECT_EQ(metrics_csv_header(), "width,height,D,paths,P1,P2,threshold,total,bad,accuracy");
	EXPECT_EQ(metrics_csv_line(320, 240, p, r), "320,240,64,8,5,90,3,200,50,0.750000");
}

} // namespace
} // namespace sgm
