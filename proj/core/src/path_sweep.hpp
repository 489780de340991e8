#ifndef SGM_PATH_SWEEP_HPP
#define SGM_PATH_SWEEP_HPP

// Internal: the single-direction recurrence and its traversal, shared by the
// materialized aggregation and the fused variants.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <vector>

#include "sgm/aggregation.hpp"

namespace sgm::detail {

/// One recurrence step. prev holds the predecessor's D costs and prev_min
/// their minimum. Returns the minimum of the new costs.
inline std::uint8_t recurrence_step(const std::uint8_t* cost, const std::uint8_t* prev, int prev_min,
                                    std::uint8_t* out, int D, int p1, int p2)
{
	const int cap = prev_min + p2;
	if (D == 1) {
		const int v = cost[0] + std::min<int>(prev[0], cap) - prev_min;
		out[0] = static_cast<std::uint8_t>(v);
		return out[0];
	}

	int lowest = 255;
	{
		const int best = std::min({static_cast<int>(prev[0]), prev[1] + p1, cap});
		const int v = cost[0] + best - prev_min;
		out[0] = static_cast<std::uint8_t>(v);
		lowest = v;
	}
	for (int d = 1; d < D - 1; ++d) {
		int best = prev[d];
		best = std::min(best, prev[d - 1] + p1);
		best = std::min(best, prev[d + 1] + p1);
		best = std::min(best, cap);
		const int v = cost[d] + best - prev_min;
		out[d] = static_cast<std::uint8_t>(v);
		lowest = std::min(lowest, v);
	}
	{
		const int best = std::min({static_cast<int>(prev[D - 1]), prev[D - 2] + p1, cap});
		const int v = cost[D - 1] + best - prev_min;
		out[D - 1] = static_cast<std::uint8_t>(v);
		lowest = std::min(lowest, v);
	}
	return static_cast<std::uint8_t>(lowest);
}

inline std::uint8_t path_start(const std::uint8_t* cost, std::uint8_t* out, int D)
{
	std::memcpy(out, cost, static_cast<std::size_t>(D));
	return *std::min_element(out, out + D);
}

/// Walks every pixel in dependency order for direction r.
///
/// cost(x, y, scratch) returns a pointer to the pixel's D matching costs
/// (scratch is a D-byte buffer it may fill). emit(x, y, L) receives the
/// finished costs; emit may run concurrently for distinct pixels.
///
/// Horizontal paths: rows are independent slices. Otherwise rows are visited
/// in path order and the pixels of one row, whose predecessors all lie in the
/// previous row, are processed in parallel.
template <typename CostFn, typename EmitFn>
void sweep(int width, int height, int D, PathDirection r, int p1, int p2, WorkerPool* pool, CostFn&& cost,
           EmitFn&& emit)
{
	const auto Dz = static_cast<std::size_t>(D);

	if (r.ry == 0) {
		parallel_for(pool, static_cast<std::size_t>(height), [&](std::size_t y0, std::size_t y1) {
			std::vector<std::uint8_t> scratch(Dz), a(Dz), b(Dz);
			for (auto y = static_cast<int>(y0); y < static_cast<int>(y1); ++y) {
				std::uint8_t* prev = a.data();
				std::uint8_t* cur = b.data();
				int x = r.rx > 0 ? 0 : width - 1;
				int prev_min = path_start(cost(x, y, scratch.data()), prev, D);
				emit(x, y, static_cast<const std::uint8_t*>(prev));
				for (int step = 1; step < width; ++step) {
					x += r.rx;
					prev_min = recurrence_step(cost(x, y, scratch.data()), prev, prev_min, cur, D, p1, p2);
					emit(x, y, static_cast<const std::uint8_t*>(cur));
					std::swap(prev, cur);
				}
			}
		});
		return;
	}

	const auto W = static_cast<std::size_t>(width);
	std::vector<std::uint8_t> prev_row(W * Dz), cur_row(W * Dz);
	std::vector<std::uint8_t> prev_min(W), cur_min(W);

	const int y_first = r.ry > 0 ? 0 : height - 1;
	for (int step = 0; step < height; ++step) {
		const int y = y_first + step * r.ry;
		const bool first_row = step == 0;
		parallel_for(pool, W, [&](std::size_t x0, std::size_t x1) {
			std::vector<std::uint8_t> scratch(Dz);
			for (auto x = static_cast<int>(x0); x < static_cast<int>(x1); ++x) {
				std::uint8_t* out = cur_row.data() + static_cast<std::size_t>(x) * Dz;
				const std::uint8_t* c = cost(x, y, scratch.data());
				const int px = x - r.rx;
				if (first_row || px < 0 || px >= width) {
					cur_min[static_cast<std::size_t>(x)] = path_start(c, out, D);
				} else {
					const auto pxz = static_cast<std::size_t>(px);
					cur_min[static_cast<std::size_t>(x)] =
					    recurrence_step(c, prev_row.data() + pxz * Dz, prev_min[pxz], out, D, p1, p2);
				}
				emit(x, y, static_cast<const std::uint8_t*>(out));
			}
		});
		std::swap(prev_row, cur_row);
		std::swap(prev_min, cur_min);
	}
}

} // namespace sgm::detail

#endif
