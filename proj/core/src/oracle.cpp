#include "sgm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sgm::oracle {

namespace {

int pixel(const GrayImage& img, int x, int y)
{
	x = std::max(0, std::min(x, img.width() - 1));
	y = std::max(0, std::min(y, img.height() - 1));
	return img(x, y);
}

int hamming(std::uint32_t a, std::uint32_t b)
{
	int n = 0;
	for (int bit = 0; bit < 32; ++bit) {
		if (((a >> bit) & 1u) != ((b >> bit) & 1u)) {
			++n;
		}
	}
	return n;
}

bool inside(const CostVolume& v, int x, int y)
{
	return x >= 0 && y >= 0 && x < v.width() && y < v.height();
}

} // namespace

CensusImage census(const GrayImage& image)
{
	CensusImage out(image.width(), image.height());
	for (int y = 0; y < image.height(); ++y) {
		for (int x = 0; x < image.width(); ++x) {
			std::vector<int> bits;
			for (int i = 1; i <= 4; ++i) {
				for (int j = -3; j <= 3; ++j) {
					bits.push_back(pixel(image, x + i, y + j) >= pixel(image, x - i, y - j) ? 1 : 0);
				}
			}
			for (int j = 1; j <= 3; ++j) {
				bits.push_back(pixel(image, x, y + j) >= pixel(image, x, y - j) ? 1 : 0);
			}
			// bits[0] is the most significant of the 31.
			std::uint32_t f = 0;
			for (std::size_t k = 0; k < bits.size(); ++k) {
				if (bits[k] != 0) {
					f |= 1u << (bits.size() - 1 - k);
				}
			}
			out(x, y) = f;
		}
	}
	return out;
}

CostVolume matching_cost(const CensusImage& base, const CensusImage& match, int disparities)
{
	if (!base.same_shape(match)) {
		throw std::invalid_argument("census images differ in size");
	}
	CostVolume mc(base.width(), base.height(), disparities);
	for (int y = 0; y < base.height(); ++y) {
		for (int x = 0; x < base.width(); ++x) {
			for (int d = 0; d < disparities; ++d) {
				const int mx = x - d < 0 ? 0 : x - d;
				mc(x, y, d) = static_cast<std::uint8_t>(hamming(base(x, y), match(mx, y)));
			}
		}
	}
	return mc;
}

std::vector<PathDirection> directions(PathSet set)
{
	switch (set) {
	case PathSet::Two:
		return {{1, 0}, {0, 1}};
	case PathSet::Four:
		return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
	case PathSet::Eight:
		return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
	}
	throw std::invalid_argument("unknown path set");
}

AggregatedVolume sgm_path(const CostVolume& mc, PathDirection r, const SgmParams& params)
{
	const int D = mc.disparities();
	AggregatedVolume L(mc.width(), mc.height(), D);
	std::vector<bool> visited(static_cast<std::size_t>(mc.width()) * mc.height(), false);

	for (int sy = 0; sy < mc.height(); ++sy) {
		for (int sx = 0; sx < mc.width(); ++sx) {
			if (inside(mc, sx - r.rx, sy - r.ry)) {
				continue; // not a path start
			}
			for (int d = 0; d < D; ++d) {
				L(sx, sy, d) = mc(sx, sy, d);
			}
			visited[static_cast<std::size_t>(sy) * mc.width() + sx] = true;

			int px = sx;
			int py = sy;
			for (int x = sx + r.rx, y = sy + r.ry; inside(mc, x, y); x += r.rx, y += r.ry) {
				int min_prev = std::numeric_limits<int>::max();
				for (int k = 0; k < D; ++k) {
					min_prev = std::min(min_prev, static_cast<int>(L(px, py, k)));
				}
				for (int d = 0; d < D; ++d) {
					std::vector<int> candidates;
					candidates.push_back(L(px, py, d));
					if (d - 1 >= 0) {
						candidates.push_back(L(px, py, d - 1) + params.p1);
					}
					if (d + 1 < D) {
						candidates.push_back(L(px, py, d + 1) + params.p1);
					}
					candidates.push_back(min_prev + params.p2);
					const int value = mc(x, y, d) + *std::min_element(candidates.begin(), candidates.end()) - min_prev;
					if (value < 0 || value > 255) {
						throw std::logic_error("aggregated cost left the 8-bit range");
					}
					L(x, y, d) = static_cast<std::uint8_t>(value);
				}
				visited[static_cast<std::size_t>(y) * mc.width() + x] = true;
				px = x;
				py = y;
			}
		}
	}
	if (std::find(visited.begin(), visited.end(), false) != visited.end()) {
		throw std::logic_error("path enumeration missed a pixel");
	}
	return L;
}

DisparityMap select(const std::vector<AggregatedVolume>& volumes)
{
	if (volumes.empty()) {
		throw std::invalid_argument("no volumes");
	}
	const auto& first = volumes.front();
	DisparityMap out(first.width(), first.height());
	for (int y = 0; y < first.height(); ++y) {
		for (int x = 0; x < first.width(); ++x) {
			int best_d = 0;
			int best_sum = std::numeric_limits<int>::max();
			for (int d = 0; d < first.disparities(); ++d) {
				int sum = 0;
				for (const auto& v : volumes) {
					sum += v(x, y, d);
				}
				if (sum < best_sum) {
					best_sum = sum;
					best_d = d;
				}
			}
			out(x, y) = static_cast<std::uint16_t>(best_d);
		}
	}
	return out;
}

DisparityMap median3x3(const DisparityMap& map)
{
	DisparityMap out = map;
	for (int y = 1; y + 1 < map.height(); ++y) {
		for (int x = 1; x + 1 < map.width(); ++x) {
			std::vector<std::uint16_t> window;
			for (int dy = -1; dy <= 1; ++dy) {
				for (int dx = -1; dx <= 1; ++dx) {
					window.push_back(map(x + dx, y + dy));
				}
			}
			std::sort(window.begin(), window.end());
			out(x, y) = window[4];
		}
	}
	return out;
}

PipelineTrace pipeline_trace(const GrayImage& left, const GrayImage& right, const SgmParams& params, bool median)
{
	PipelineTrace t;
	t.left_census = census(left);
	t.right_census = census(right);
	t.cost = oracle::matching_cost(t.left_census, t.right_census, params.disparities);
	for (const PathDirection r : directions(params.paths)) {
		t.paths.push_back(sgm_path(t.cost, r, params));
	}
	t.raw = select(t.paths);
	t.filtered = median ? median3x3(t.raw) : t.raw;
	return t;
}

DisparityMap pipeline(const GrayImage& left, const GrayImage& right, const SgmParams& params, bool median)
{
	return pipeline_trace(left, right, params, median).filtered;
}

} // namespace sgm::oracle
