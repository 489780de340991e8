#ifndef SGM_COST_VOLUME_HPP
#define SGM_COST_VOLUME_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgm/image.hpp"
#include "sgm/worker_pool.hpp"

namespace sgm {

/// Number of aggregation directions: {L->R, T->B}, plus reverses, plus diagonals.
enum class PathSet : int {
	Two = 2,
	Four = 4,
	Eight = 8,
};

/// Throws std::invalid_argument unless n is 2, 4 or 8.
PathSet path_set_from_count(int n);

struct SgmParams {
	int disparities = 128;
	int p1 = 7;
	int p2 = 84;
	PathSet paths = PathSet::Four;

	/// 1 <= D <= 256 and 0 < P1 < P2 <= 224, so that 31 + P2 fits in a byte.
	void validate() const;
};

inline constexpr int kMaxDisparities = 256;
inline constexpr int kMaxP2 = 224;

/// W x H x D cube of 8-bit costs. Disparity varies fastest:
/// index = (y * width + x) * D + d.
class CostVolume {
public:
	CostVolume() = default;
	CostVolume(int width, int height, int disparities, std::uint8_t fill = 0);

	int width() const noexcept { return width_; }
	int height() const noexcept { return height_; }
	int disparities() const noexcept { return disparities_; }
	std::size_t size() const noexcept { return data_.size(); }

	std::size_t offset(int x, int y) const noexcept
	{
		return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)) *
		       static_cast<std::size_t>(disparities_);
	}

	std::uint8_t& operator()(int x, int y, int d) noexcept { return data_[offset(x, y) + static_cast<std::size_t>(d)]; }
	std::uint8_t operator()(int x, int y, int d) const noexcept { return data_[offset(x, y) + static_cast<std::size_t>(d)]; }

	/// The D costs of one pixel.
	std::uint8_t* at(int x, int y) noexcept { return data_.data() + offset(x, y); }
	const std::uint8_t* at(int x, int y) const noexcept { return data_.data() + offset(x, y); }

	std::span<std::uint8_t> data() noexcept { return data_; }
	std::span<const std::uint8_t> data() const noexcept { return data_; }

	bool same_shape(const CostVolume& o) const noexcept
	{
		return width_ == o.width_ && height_ == o.height_ && disparities_ == o.disparities_;
	}

	friend bool operator==(const CostVolume&, const CostVolume&) = default;

private:
	int width_ = 0;
	int height_ = 0;
	int disparities_ = 0;
	std::vector<std::uint8_t> data_;
};

/// Smoothed per-direction costs; same shape and layout as the matching cost.
using AggregatedVolume = CostVolume;

/// MC(x, y, d) = popcount(base(x, y) ^ match(max(x - d, 0), y)).
/// Throws std::invalid_argument on a dimension mismatch or D outside [1, 256].
CostVolume matching_cost(const CensusImage& base, const CensusImage& match, int disparities,
                         WorkerPool* pool = nullptr);

/// Debug dump: width, height, D as little-endian u32 words, then the raw cube.
std::vector<std::byte> serialize_cost_volume(const CostVolume& volume);
CostVolume deserialize_cost_volume(std::span<const std::byte> bytes);

} // namespace sgm

#endif
