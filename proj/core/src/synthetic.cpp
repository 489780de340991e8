#include "sgm/synthetic.hpp"

#include <stdexcept>
#include <vector>

namespace sgm {

namespace {

// splitmix64; std distributions are implementation-defined, this is not.
class SplitMix64 {
public:
	explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next()
	{
		std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
		return z ^ (z >> 31);
	}

private:
	std::uint64_t state_;
};

} // namespace

GrayImage make_textured_image(int width, int height, std::uint64_t seed)
{
	SplitMix64 rng(seed);
	std::vector<int> noise(static_cast<std::size_t>(width) * height);
	for (auto& v : noise) {
		v = static_cast<int>(rng.next() >> 56);
	}
	GrayImage img(width, height);
	for (int y = 0; y < height; ++y) {
		for (int x = 0; x < width; ++x) {
			// Horizontal [1 2 1] blur: keeps texture strong but not white noise.
			const int xl = x > 0 ? x - 1 : x;
			const int xr = x + 1 < width ? x + 1 : x;
			const std::size_t row = static_cast<std::size_t>(y) * width;
			const int v = noise[row + xl] + 2 * noise[row + x] + noise[row + xr];
			img(x, y) = static_cast<std::uint8_t>(v / 4);
		}
	}
	return img;
}

GrayImage make_shifted_view(const GrayImage& left, int shift, std::uint64_t seed)
{
	if (shift < 0) {
		throw std::invalid_argument("shift must be non-negative");
	}
	const GrayImage filler = make_textured_image(left.width(), left.height(), seed);
	GrayImage right(left.width(), left.height());
	for (int y = 0; y < left.height(); ++y) {
		for (int x = 0; x < left.width(); ++x) {
			const int src = x + shift;
			right(x, y) = src < left.width() ? left(src, y) : filler(x, y);
		}
	}
	return right;
}

} // namespace sgm
