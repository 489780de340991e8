#include "sgm/census.hpp"

#include <algorithm>

namespace sgm {

namespace {

// Fetches through an accessor so the interior and border paths share the bit order.
template <typename Fetch>
inline std::uint32_t census_feature(Fetch&& at)
{
	std::uint32_t f = 0;
	for (int i = 1; i <= kCensusRadiusX; ++i) {
		for (int j = -kCensusRadiusY; j <= kCensusRadiusY; ++j) {
			f = (f << 1) | static_cast<std::uint32_t>(at(i, j) >= at(-i, -j));
		}
	}
	for (int j = 1; j <= kCensusRadiusY; ++j) {
		f = (f << 1) | static_cast<std::uint32_t>(at(0, j) >= at(0, -j));
	}
	return f;
}

void census_rows(const GrayImage& image, CensusImage& out, int y0, int y1)
{
	const int w = image.width();
	const int h = image.height();
	const auto stride = static_cast<std::ptrdiff_t>(w);

	for (int y = y0; y < y1; ++y) {
		const bool rows_inside = y >= kCensusRadiusY && y + kCensusRadiusY < h;
		std::uint32_t* dst = out.row(y);
		for (int x = 0; x < w; ++x) {
			if (rows_inside && x >= kCensusRadiusX && x + kCensusRadiusX < w) {
				const std::uint8_t* c = image.row(y) + x;
				dst[x] = census_feature([c, stride](int dx, int dy) { return c[dy * stride + dx]; });
			} else {
				dst[x] = census_feature([&](int dx, int dy) {
					const int sx = std::clamp(x + dx, 0, w - 1);
					const int sy = std::clamp(y + dy, 0, h - 1);
					return image(sx, sy);
				});
			}
		}
	}
}

} // namespace

CensusImage census_transform(const GrayImage& image, WorkerPool* pool)
{
	CensusImage out(image.width(), image.height());
	parallel_for(pool, static_cast<std::size_t>(image.height()), [&](std::size_t begin, std::size_t end) {
		census_rows(image, out, static_cast<int>(begin), static_cast<int>(end));
	});
	return out;
}

} // namespace sgm
