#include "sgm/disparity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "path_sweep.hpp"

namespace sgm {

namespace {

using SumBuffer = std::array<std::uint16_t, kMaxDisparities>;

std::uint16_t argmin_lowest(const std::uint16_t* sums, int D)
{
	int best = 0;
	for (int d = 1; d < D; ++d) {
		if (sums[d] < sums[best]) {
			best = d;
		}
	}
	return static_cast<std::uint16_t>(best);
}

void accumulate(std::uint16_t* sums, const std::uint8_t* costs, int D)
{
	for (int d = 0; d < D; ++d) {
		sums[d] = static_cast<std::uint16_t>(sums[d] + costs[d]);
	}
}

void check_volumes(std::span<const AggregatedVolume> volumes, const SgmParams& params, const CostVolume* reference)
{
	params.validate();
	const CostVolume& first = reference != nullptr ? *reference : volumes.front();
	if (first.disparities() != params.disparities) {
		throw std::invalid_argument("volume disparity count differs from params");
	}
	for (const auto& v : volumes) {
		if (!v.same_shape(first)) {
			throw std::invalid_argument("aggregated volumes differ in shape");
		}
	}
}

} // namespace

DisparityMap select_disparity(std::span<const AggregatedVolume> volumes, const SgmParams& params, WorkerPool* pool)
{
	if (volumes.empty()) {
		throw std::invalid_argument("no aggregated volumes to select from");
	}
	check_volumes(volumes, params, nullptr);

	const int w = volumes.front().width();
	const int h = volumes.front().height();
	const int D = params.disparities;
	DisparityMap out(w, h);

	parallel_for(pool, static_cast<std::size_t>(h), [&](std::size_t y0, std::size_t y1) {
		SumBuffer sums{};
		for (auto y = static_cast<int>(y0); y < static_cast<int>(y1); ++y) {
			for (int x = 0; x < w; ++x) {
				std::fill_n(sums.begin(), D, std::uint16_t{0});
				for (const auto& v : volumes) {
					accumulate(sums.data(), v.at(x, y), D);
				}
				out(x, y) = argmin_lowest(sums.data(), D);
			}
		}
	});
	return out;
}

DisparityMap median_filter_3x3(const DisparityMap& map, WorkerPool* pool)
{
	DisparityMap out = map;
	const int w = map.width();
	const int h = map.height();
	if (w < 3 || h < 3) {
		return out;
	}
	parallel_for(pool, static_cast<std::size_t>(h - 2), [&](std::size_t r0, std::size_t r1) {
		std::array<std::uint16_t, 9> window{};
		for (auto y = static_cast<int>(r0) + 1; y < static_cast<int>(r1) + 1; ++y) {
			for (int x = 1; x < w - 1; ++x) {
				std::size_t k = 0;
				for (int dy = -1; dy <= 1; ++dy) {
					for (int dx = -1; dx <= 1; ++dx) {
						window[k++] = map(x + dx, y + dy);
					}
				}
				std::nth_element(window.begin(), window.begin() + 4, window.end());
				out(x, y) = window[4];
			}
		}
	});
	return out;
}

DisparityMap fused_last_path_select(const CostVolume& mc, std::span<const AggregatedVolume> partial,
                                    PathDirection last_dir, const SgmParams& params, WorkerPool* pool)
{
	check_volumes(partial, params, &mc);
	if (!last_dir.valid()) {
		throw std::invalid_argument("path direction components must be in {-1,0,1} and not both zero");
	}
	const int D = mc.disparities();
	DisparityMap out(mc.width(), mc.height());
	detail::sweep(
	    mc.width(), mc.height(), D, last_dir, params.p1, params.p2, pool,
	    [&](int x, int y, std::uint8_t*) { return mc.at(x, y); },
	    [&](int x, int y, const std::uint8_t* l) {
		    SumBuffer sums;
		    std::copy_n(l, D, sums.begin());
		    for (const auto& v : partial) {
			    accumulate(sums.data(), v.at(x, y), D);
		    }
		    out(x, y) = argmin_lowest(sums.data(), D);
	    });
	return out;
}

} // namespace sgm
