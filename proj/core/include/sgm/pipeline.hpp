#ifndef SGM_PIPELINE_HPP
#define SGM_PIPELINE_HPP

#include <string>
#include <vector>

#include "sgm/aggregation.hpp"
#include "sgm/cost_volume.hpp"
#include "sgm/image.hpp"
#include "sgm/worker_pool.hpp"

namespace sgm {

struct PipelineOptions {
	SgmParams params;
	bool median = true;
	// Aggregate the last direction inside the selection sweep.
	bool fuse_last_path = false;
};

/// Wall-clock milliseconds per stage of one run.
struct StageTimes {
	double census_ms = 0.0;
	double cost_ms = 0.0;
	std::vector<double> aggregation_ms; // one per direction
	double select_ms = 0.0;
	double median_ms = 0.0;

	double total_ms() const;
	StageTimes& operator+=(const StageTimes& other);
};

/// census -> matching cost -> aggregation -> winner-takes-all -> median.
/// The left image is the base. Throws std::invalid_argument if the images
/// differ in size or the parameters are invalid.
DisparityMap compute_disparity(const GrayImage& left, const GrayImage& right, const PipelineOptions& options,
                               WorkerPool* pool = nullptr, StageTimes* times = nullptr);

/// Multi-line per-stage report (means over `iterations` runs). fps is
/// iterations divided by wall_ms, the wall time of the whole compute region.
std::string format_timing_report(const StageTimes& accumulated, int iterations, double wall_ms,
                                 const PipelineOptions& options);

} // namespace sgm

#endif
