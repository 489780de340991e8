#ifndef SGM_TESTS_TEST_UTIL_HPP
#define SGM_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "sgm/cost_volume.hpp"
#include "sgm/image.hpp"

namespace sgm::test {

inline GrayImage random_image(std::mt19937_64& rng, int w, int h, int lo = 0, int hi = 255)
{
	std::uniform_int_distribution<int> dist(lo, hi);
	GrayImage img(w, h);
	for (auto& p : img.pixels()) {
		p = static_cast<std::uint8_t>(dist(rng));
	}
	return img;
}

inline CensusImage random_census(std::mt19937_64& rng, int w, int h)
{
	std::uniform_int_distribution<std::uint32_t> dist(0, 0x7FFFFFFFu);
	CensusImage img(w, h);
	for (auto& p : img.pixels()) {
		p = dist(rng);
	}
	return img;
}

inline CostVolume random_cost(std::mt19937_64& rng, int w, int h, int D, int max_cost = 31)
{
	std::uniform_int_distribution<int> dist(0, max_cost);
	CostVolume v(w, h, D);
	for (auto& c : v.data()) {
		c = static_cast<std::uint8_t>(dist(rng));
	}
	return v;
}

/// Random P1 in [1, 40] and P2 in (P1, 224].
inline SgmParams random_params(std::mt19937_64& rng, int D, PathSet paths)
{
	SgmParams p;
	p.disparities = D;
	p.paths = paths;
	p.p1 = std::uniform_int_distribution<int>(1, 40)(rng);
	p.p2 = std::uniform_int_distribution<int>(p.p1 + 1, kMaxP2)(rng);
	return p;
}

/// Fresh per-test scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name)
{
	auto dir = std::filesystem::temp_directory_path() / ("sgm_test_" + name);
	std::filesystem::remove_all(dir);
	std::filesystem::create_directories(dir);
	return dir;
}

} // namespace sgm::test

#endif
