#ifndef SGM_CENSUS_HPP
#define SGM_CENSUS_HPP

#include <cstdint>

#include "sgm/image.hpp"
#include "sgm/worker_pool.hpp"

namespace sgm {

/// Window half-extents of the 9x7 center-symmetric census.
inline constexpr int kCensusRadiusX = 4;
inline constexpr int kCensusRadiusY = 3;
inline constexpr int kCensusBits = 31;
inline constexpr std::uint32_t kCensusMask = 0x7FFFFFFFu;

/// 9x7 center-symmetric census transform.
///
/// Each feature packs 31 comparisons s(u, v) = (u >= v), most significant bit
/// first: for i = 1..4 and j = -3..3, I(x+i, y+j) vs I(x-i, y-j); then for
/// j = 1..3, I(x, y+j) vs I(x, y-j). Neighbors outside the image read the
/// nearest edge pixel. Rows are split across the pool; the result does not
/// depend on the worker count.
CensusImage census_transform(const GrayImage& image, WorkerPool* pool = nullptr);

} // namespace sgm

#endif
