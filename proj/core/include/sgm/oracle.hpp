#ifndef SGM_ORACLE_HPP
#define SGM_ORACLE_HPP

// Slow, literal, single-threaded implementations of every pipeline stage.
// They share only data types with the optimized code and exist to be
// compared against it.

#include <vector>

#include "sgm/aggregation.hpp"
#include "sgm/cost_volume.hpp"
#include "sgm/image.hpp"

namespace sgm::oracle {

CensusImage census(const GrayImage& image);

CostVolume matching_cost(const CensusImage& base, const CensusImage& match, int disparities);

/// Walks each maximal straight path from its start pixel and evaluates the
/// recurrence with explicit predecessor lookups.
AggregatedVolume sgm_path(const CostVolume& mc, PathDirection r, const SgmParams& params);

std::vector<PathDirection> directions(PathSet set);

DisparityMap select(const std::vector<AggregatedVolume>& volumes);

DisparityMap median3x3(const DisparityMap& map);

struct PipelineTrace {
	CensusImage left_census;
	CensusImage right_census;
	CostVolume cost;
	std::vector<AggregatedVolume> paths;
	DisparityMap raw;
	DisparityMap filtered;
};

/// Left image is the base; matches are searched leftwards in the right image.
PipelineTrace pipeline_trace(const GrayImage& left, const GrayImage& right, const SgmParams& params,
                             bool median = true);

DisparityMap pipeline(const GrayImage& left, const GrayImage& right, const SgmParams& params, bool median = true);

} // namespace sgm::oracle

#endif
