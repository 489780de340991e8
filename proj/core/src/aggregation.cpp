#include "sgm/aggregation.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

#include "path_sweep.hpp"

namespace sgm {

std::vector<PathDirection> path_directions(PathSet set)
{
	std::vector<PathDirection> dirs{{1, 0}, {0, 1}};
	if (set == PathSet::Four || set == PathSet::Eight) {
		dirs.push_back({-1, 0});
		dirs.push_back({0, -1});
	}
	if (set == PathSet::Eight) {
		dirs.push_back({1, 1});
		dirs.push_back({-1, 1});
		dirs.push_back({1, -1});
		dirs.push_back({-1, -1});
	}
	return dirs;
}

namespace {

void check_inputs(PathDirection r, const SgmParams& params, int disparities)
{
	params.validate();
	if (!r.valid()) {
		throw std::invalid_argument("path direction components must be in {-1,0,1} and not both zero");
	}
	if (params.disparities != disparities) {
		throw std::invalid_argument("cost volume disparity count differs from params");
	}
}

} // namespace

AggregatedVolume aggregate_path(const CostVolume& mc, PathDirection r, const SgmParams& params, WorkerPool* pool)
{
	check_inputs(r, params, mc.disparities());
	const int D = mc.disparities();
	AggregatedVolume out(mc.width(), mc.height(), D);
	detail::sweep(
	    mc.width(), mc.height(), D, r, params.p1, params.p2, pool,
	    [&](int x, int y, std::uint8_t*) { return mc.at(x, y); },
	    [&](int x, int y, const std::uint8_t* l) { std::memcpy(out.at(x, y), l, static_cast<std::size_t>(D)); });
	return out;
}

AggregatedVolume aggregate_path_fused(const CensusImage& base, const CensusImage& match, PathDirection r,
                                      const SgmParams& params, WorkerPool* pool)
{
	if (!base.same_shape(match)) {
		throw std::invalid_argument("census images differ in size");
	}
	check_inputs(r, params, params.disparities);
	const int D = params.disparities;
	AggregatedVolume out(base.width(), base.height(), D);
	detail::sweep(
	    base.width(), base.height(), D, r, params.p1, params.p2, pool,
	    [&](int x, int y, std::uint8_t* scratch) {
		    const std::uint32_t f = base(x, y);
		    const std::uint32_t* m = match.row(y);
		    for (int d = 0; d < D; ++d) {
			    scratch[d] = static_cast<std::uint8_t>(std::popcount(f ^ m[x >= d ? x - d : 0]));
		    }
		    return static_cast<const std::uint8_t*>(scratch);
	    },
	    [&](int x, int y, const std::uint8_t* l) { std::memcpy(out.at(x, y), l, static_cast<std::size_t>(D)); });
	return out;
}

std::vector<AggregatedVolume> aggregate_all(const CostVolume& mc, const SgmParams& params, WorkerPool* pool)
{
	std::vector<AggregatedVolume> volumes;
	for (const PathDirection r : path_directions(params.paths)) {
		volumes.push_back(aggregate_path(mc, r, params, pool));
	}
	return volumes;
}

} // namespace sgm
