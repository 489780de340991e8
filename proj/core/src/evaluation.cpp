#include "sgm/evaluation.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace sgm {

EvalResult bad_pixel_rate(const DisparityMap& est, const DisparityMap& gt, const EvalMask* mask, int threshold)
{
	if (!est.same_shape(gt)) {
		throw std::invalid_argument("estimate and ground truth differ in size");
	}
	if (mask != nullptr && !mask->same_shape(est)) {
		throw std::invalid_argument("mask differs in size from the disparity map");
	}
	if (threshold < 0) {
		throw std::invalid_argument("threshold must be non-negative");
	}

	EvalResult r;
	r.threshold = threshold;
	const auto e = est.pixels();
	const auto g = gt.pixels();
	for (std::size_t i = 0; i < e.size(); ++i) {
		if (mask != nullptr && mask->pixels()[i] == 0) {
			continue;
		}
		++r.total;
		if (std::abs(static_cast<int>(e[i]) - static_cast<int>(g[i])) > threshold) {
			++r.bad;
		}
	}
	if (r.total == 0) {
		throw std::invalid_argument("evaluation mask selects no pixels");
	}
	r.accuracy = 1.0 - static_cast<double>(r.bad) / static_cast<double>(r.total);
	return r;
}

double disparity_to_depth(double disparity, const CameraGeometry& geom)
{
	if (!(geom.focal > 0.0) || !(geom.baseline > 0.0)) {
		throw std::invalid_argument("focal length and baseline must be positive");
	}
	if (!(disparity > 0.0)) {
		throw std::domain_error("zero disparity maps to a point at infinity");
	}
	return geom.focal * geom.baseline / disparity;
}

std::string metrics_csv_header()
{
	return "width,height,D,paths,P1,P2,threshold,total,bad,accuracy";
}

std::string metrics_csv_line(int width, int height, const SgmParams& params, const EvalResult& result)
{
	char buf[256];
	std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d,%d,%d,%zu,%zu,%.6f", width, height, params.disparities,
	              static_cast<int>(params.paths), params.p1, params.p2, result.threshold, result.total, result.bad,
	              result.accuracy);
	return buf;
}

} // namespace sgm
