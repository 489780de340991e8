#ifndef SGM_EVALUATION_HPP
#define SGM_EVALUATION_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "sgm/cost_volume.hpp"
#include "sgm/image.hpp"

namespace sgm {

inline constexpr int kDefaultBadPixelThreshold = 3;

struct EvalResult {
	std::size_t total = 0;
	std::size_t bad = 0;
	double accuracy = 0.0;
	int threshold = kDefaultBadPixelThreshold;
};

struct CameraGeometry {
	double focal = 0.0;    // pixels
	double baseline = 0.0; // meters
};

/// Validity raster for evaluation: nonzero marks a pixel to evaluate.
using EvalMask = Image<std::uint8_t>;

/// Counts pixels with |est - gt| > threshold among those selected by mask
/// (all pixels when absent). Throws std::invalid_argument on shape mismatch,
/// a negative threshold, or when no pixel is selected.
EvalResult bad_pixel_rate(const DisparityMap& est, const DisparityMap& gt, const EvalMask* mask = nullptr,
                          int threshold = kDefaultBadPixelThreshold);

/// z = f * T / d. Throws std::domain_error for d <= 0 and
/// std::invalid_argument for a non-positive focal length or baseline.
double disparity_to_depth(double disparity, const CameraGeometry& geom);

/// `width,height,D,paths,P1,P2,threshold,total,bad,accuracy`
std::string metrics_csv_header();
std::string metrics_csv_line(int width, int height, const SgmParams& params, const EvalResult& result);

} // namespace sgm

#endif
