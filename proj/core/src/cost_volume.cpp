#include "sgm/cost_volume.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sgm {

PathSet path_set_from_count(int n)
{
	switch (n) {
	case 2:
		return PathSet::Two;
	case 4:
		return PathSet::Four;
	case 8:
		return PathSet::Eight;
	default:
		throw std::invalid_argument("paths must be 2, 4 or 8 (got " + std::to_string(n) + ")");
	}
}

void SgmParams::validate() const
{
	if (disparities < 1 || disparities > kMaxDisparities) {
		throw std::invalid_argument("disparities must be in [1, 256] (got " + std::to_string(disparities) + ")");
	}
	if (p1 < 1) {
		throw std::invalid_argument("P1 must be >= 1 (got " + std::to_string(p1) + ")");
	}
	if (p2 <= p1 || p2 > kMaxP2) {
		throw std::invalid_argument("P2 must satisfy P1 < P2 <= 224 (got P1=" + std::to_string(p1) +
		                            ", P2=" + std::to_string(p2) + ")");
	}
	path_set_from_count(static_cast<int>(paths));
}

CostVolume::CostVolume(int width, int height, int disparities, std::uint8_t fill)
	: width_(width), height_(height), disparities_(disparities)
{
	if (width < 1 || height < 1 || disparities < 1) {
		throw std::invalid_argument("cost volume dimensions must be positive");
	}
	data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
	                 static_cast<std::size_t>(disparities),
	             fill);
}

CostVolume matching_cost(const CensusImage& base, const CensusImage& match, int disparities, WorkerPool* pool)
{
	if (!base.same_shape(match)) {
		throw std::invalid_argument("census images differ in size");
	}
	if (disparities < 1 || disparities > kMaxDisparities) {
		throw std::invalid_argument("disparities must be in [1, 256]");
	}
	const int w = base.width();
	const int h = base.height();
	CostVolume mc(w, h, disparities);

	parallel_for(pool, static_cast<std::size_t>(h), [&](std::size_t y0, std::size_t y1) {
		for (auto y = static_cast<int>(y0); y < static_cast<int>(y1); ++y) {
			const std::uint32_t* b = base.row(y);
			const std::uint32_t* m = match.row(y);
			for (int x = 0; x < w; ++x) {
				std::uint8_t* out = mc.at(x, y);
				const std::uint32_t f = b[x];
				// d <= x reads m[x - d]; larger d all clamp to column 0.
				const int direct = std::min(disparities, x + 1);
				for (int d = 0; d < direct; ++d) {
					out[d] = static_cast<std::uint8_t>(std::popcount(f ^ m[x - d]));
				}
				if (direct < disparities) {
					std::fill(out + direct, out + disparities, static_cast<std::uint8_t>(std::popcount(f ^ m[0])));
				}
			}
		}
	});
	return mc;
}

namespace {

void put_u32(std::vector<std::byte>& out, std::uint32_t v)
{
	for (int i = 0; i < 4; ++i) {
		out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFFu));
	}
}

std::uint32_t get_u32(std::span<const std::byte> in, std::size_t pos)
{
	std::uint32_t v = 0;
	for (int i = 0; i < 4; ++i) {
		v |= static_cast<std::uint32_t>(in[pos + static_cast<std::size_t>(i)]) << (8 * i);
	}
	return v;
}

} // namespace

std::vector<std::byte> serialize_cost_volume(const CostVolume& volume)
{
	std::vector<std::byte> out;
	out.reserve(12 + volume.size());
	put_u32(out, static_cast<std::uint32_t>(volume.width()));
	put_u32(out, static_cast<std::uint32_t>(volume.height()));
	put_u32(out, static_cast<std::uint32_t>(volume.disparities()));
	for (std::uint8_t c : volume.data()) {
		out.push_back(static_cast<std::byte>(c));
	}
	return out;
}

CostVolume deserialize_cost_volume(std::span<const std::byte> bytes)
{
	if (bytes.size() < 12) {
		throw std::invalid_argument("cost volume dump: truncated header");
	}
	const std::uint32_t w = get_u32(bytes, 0);
	const std::uint32_t h = get_u32(bytes, 4);
	const std::uint32_t d = get_u32(bytes, 8);
	if (w == 0 || h == 0 || d == 0 || w > 1u << 16 || h > 1u << 16 || d > kMaxDisparities) {
		throw std::invalid_argument("cost volume dump: bad dimensions");
	}
	const std::size_t count = static_cast<std::size_t>(w) * h * d;
	if (bytes.size() - 12 != count) {
		throw std::invalid_argument("cost volume dump: payload size mismatch");
	}
	CostVolume volume(static_cast<int>(w), static_cast<int>(h), static_cast<int>(d));
	std::transform(bytes.begin() + 12, bytes.end(), volume.data().begin(),
	               [](std::byte b) { return static_cast<std::uint8_t>(b); });
	return volume;
}

} // namespace sgm
