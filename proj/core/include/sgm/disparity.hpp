#ifndef SGM_DISPARITY_HPP
#define SGM_DISPARITY_HPP

#include <span>

#include "sgm/aggregation.hpp"
#include "sgm/cost_volume.hpp"
#include "sgm/image.hpp"
#include "sgm/worker_pool.hpp"

namespace sgm {

/// Winner-takes-all over the summed path costs. Sums use 16 bits (at most
/// 8 x 255); ties go to the lowest disparity.
DisparityMap select_disparity(std::span<const AggregatedVolume> volumes, const SgmParams& params,
                              WorkerPool* pool = nullptr);

/// Interior pixels take the median of their 3x3 neighbourhood; the one-pixel
/// border is copied unchanged.
DisparityMap median_filter_3x3(const DisparityMap& map, WorkerPool* pool = nullptr);

/// Aggregates last_dir and selects disparities in the same sweep, without
/// storing the last direction's volume. Bit-identical to running
/// aggregate_path(mc, last_dir) and select_disparity over partial + that volume.
DisparityMap fused_last_path_select(const CostVolume& mc, std::span<const AggregatedVolume> partial,
                                    PathDirection last_dir, const SgmParams& params, WorkerPool* pool = nullptr);

} // namespace sgm

#endif
