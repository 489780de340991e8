#include "sgm/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "sgm/census.hpp"
#include "sgm/disparity.hpp"

namespace sgm {

namespace {

class Stopwatch {
public:
	double lap_ms()
	{
		const auto now = std::chrono::steady_clock::now();
		const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
		last_ = now;
		return ms;
	}

private:
	std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string direction_label(PathDirection r)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "(%+d,%+d)", r.rx, r.ry);
	return buf;
}

} // namespace

double StageTimes::total_ms() const
{
	return census_ms + cost_ms + std::accumulate(aggregation_ms.begin(), aggregation_ms.end(), 0.0) + select_ms +
	       median_ms;
}

StageTimes& StageTimes::operator+=(const StageTimes& other)
{
	census_ms += other.census_ms;
	cost_ms += other.cost_ms;
	if (aggregation_ms.size() < other.aggregation_ms.size()) {
		aggregation_ms.resize(other.aggregation_ms.size(), 0.0);
	}
	for (std::size_t i = 0; i < other.aggregation_ms.size(); ++i) {
		aggregation_ms[i] += other.aggregation_ms[i];
	}
	select_ms += other.select_ms;
	median_ms += other.median_ms;
	return *this;
}

DisparityMap compute_disparity(const GrayImage& left, const GrayImage& right, const PipelineOptions& options,
                               WorkerPool* pool, StageTimes* times)
{
	const SgmParams& params = options.params;
	params.validate();
	if (!left.same_shape(right)) {
		throw std::invalid_argument("left and right images differ in size");
	}

	StageTimes local;
	Stopwatch clock;

	const CensusImage left_census = census_transform(left, pool);
	const CensusImage right_census = census_transform(right, pool);
	local.census_ms = clock.lap_ms();

	const CostVolume mc = matching_cost(left_census, right_census, params.disparities, pool);
	local.cost_ms = clock.lap_ms();

	const auto dirs = path_directions(params.paths);
	const std::size_t stored = options.fuse_last_path ? dirs.size() - 1 : dirs.size();
	std::vector<AggregatedVolume> volumes;
	volumes.reserve(stored);
	for (std::size_t i = 0; i < stored; ++i) {
		volumes.push_back(aggregate_path(mc, dirs[i], params, pool));
		local.aggregation_ms.push_back(clock.lap_ms());
	}

	DisparityMap raw;
	if (options.fuse_last_path) {
		raw = fused_last_path_select(mc, volumes, dirs.back(), params, pool);
		// The last direction's aggregation is folded into selection time.
		local.aggregation_ms.push_back(0.0);
	} else {
		raw = select_disparity(volumes, params, pool);
	}
	local.select_ms = clock.lap_ms();

	DisparityMap result = options.median ? median_filter_3x3(raw, pool) : std::move(raw);
	local.median_ms = clock.lap_ms();

	if (times != nullptr) {
		*times = std::move(local);
	}
	return result;
}

std::string format_timing_report(const StageTimes& accumulated, int iterations, double wall_ms,
                                 const PipelineOptions& options)
{
	if (iterations < 1) {
		throw std::invalid_argument("iterations must be positive");
	}
	const double n = iterations;
	std::string out;
	char line[128];
	auto add = [&](const std::string& name, double total_ms) {
		std::snprintf(line, sizeof line, "%-24s %10.3f ms\n", name.c_str(), total_ms / n);
		out += line;
	};
	add("census", accumulated.census_ms);
	add("matching cost", accumulated.cost_ms);
	const auto dirs = path_directions(options.params.paths);
	for (std::size_t i = 0; i < accumulated.aggregation_ms.size() && i < dirs.size(); ++i) {
		add("aggregate " + direction_label(dirs[i]), accumulated.aggregation_ms[i]);
	}
	add(options.fuse_last_path ? "select (+ last path)" : "select", accumulated.select_ms);
	add("median", accumulated.median_ms);
	add("total", accumulated.total_ms());
	const double total_s = wall_ms / 1000.0;
	std::snprintf(line, sizeof line, "%-24s %10.2f fps (%d iterations)\n", "throughput",
	              total_s > 0.0 ? n / total_s : 0.0, iterations);
	out += line;
	return out;
}

} // namespace sgm
