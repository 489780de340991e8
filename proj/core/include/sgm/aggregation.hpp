#ifndef SGM_AGGREGATION_HPP
#define SGM_AGGREGATION_HPP

#include <vector>

#include "sgm/cost_volume.hpp"
#include "sgm/image.hpp"
#include "sgm/worker_pool.hpp"

namespace sgm {

/// Unit step (rx, ry) along which costs propagate; rx, ry in {-1, 0, 1}.
struct PathDirection {
	int rx = 1;
	int ry = 0;

	bool valid() const noexcept
	{
		return rx >= -1 && rx <= 1 && ry >= -1 && ry <= 1 && (rx != 0 || ry != 0);
	}

	friend bool operator==(const PathDirection&, const PathDirection&) = default;
};

/// {(1,0), (0,1)}; Four adds {(-1,0), (0,-1)}; Eight adds the four diagonals.
std::vector<PathDirection> path_directions(PathSet set);

/// Smoothed cost along one direction:
///
///   L(p, d) = MC(p, d) + min(L(q, d), L(q, d-1) + P1, L(q, d+1) + P1, min_k L(q, k) + P2)
///             - min_k L(q, k)
///
/// where q = p - r is the predecessor, d +/- 1 terms outside [0, D) are dropped,
/// and L = MC wherever q lies outside the image. Results satisfy
/// MC <= L <= MC + P2, so they always fit in a byte.
AggregatedVolume aggregate_path(const CostVolume& mc, PathDirection r, const SgmParams& params,
                                WorkerPool* pool = nullptr);

/// Same result as aggregate_path(matching_cost(base, match, D), r, params), but
/// computes matching costs on the fly without materializing the cube.
AggregatedVolume aggregate_path_fused(const CensusImage& base, const CensusImage& match, PathDirection r,
                                      const SgmParams& params, WorkerPool* pool = nullptr);

/// One volume per direction of params.paths, in path_directions order.
std::vector<AggregatedVolume> aggregate_all(const CostVolume& mc, const SgmParams& params,
                                            WorkerPool* pool = nullptr);

} // namespace sgm

#endif
