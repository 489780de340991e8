#ifndef SGM_IMAGE_HPP
#define SGM_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sgm {

/// Row-major single-channel raster. The element type distinguishes the
/// pipeline's rasters: intensities, census features and disparities.
template <typename T>
class Image {
public:
	using value_type = T;

	Image() = default;

	Image(int width, int height, T fill = T{})
		: width_(width), height_(height)
	{
		if (width < 1 || height < 1) {
			throw std::invalid_argument("image dimensions must be positive");
		}
		data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
	}

	Image(int width, int height, std::vector<T> pixels)
		: width_(width), height_(height), data_(std::move(pixels))
	{
		if (width < 1 || height < 1) {
			throw std::invalid_argument("image dimensions must be positive");
		}
		if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
			throw std::invalid_argument("pixel count does not match dimensions");
		}
	}

	int width() const noexcept { return width_; }
	int height() const noexcept { return height_; }
	std::size_t size() const noexcept { return data_.size(); }
	bool empty() const noexcept { return data_.empty(); }

	T& operator()(int x, int y) noexcept { return data_[index(x, y)]; }
	const T& operator()(int x, int y) const noexcept { return data_[index(x, y)]; }

	T* row(int y) noexcept { return data_.data() + static_cast<std::size_t>(y) * width_; }
	const T* row(int y) const noexcept { return data_.data() + static_cast<std::size_t>(y) * width_; }

	std::span<T> pixels() noexcept { return data_; }
	std::span<const T> pixels() const noexcept { return data_; }

	bool same_shape(int width, int height) const noexcept
	{
		return width_ == width && height_ == height;
	}

	template <typename U>
	bool same_shape(const Image<U>& other) const noexcept
	{
		return same_shape(other.width(), other.height());
	}

	friend bool operator==(const Image&, const Image&) = default;

private:
	std::size_t index(int x, int y) const noexcept
	{
		return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
	}

	int width_ = 0;
	int height_ = 0;
	std::vector<T> data_;
};

/// 8-bit grayscale input image.
using GrayImage = Image<std::uint8_t>;

/// Per-pixel 31-bit center-symmetric census features (bit 31 always clear).
using CensusImage = Image<std::uint32_t>;

/// Per-pixel integer disparity, each value below the configured level count.
using DisparityMap = Image<std::uint16_t>;

} // namespace sgm

#endif
