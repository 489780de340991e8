#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "sgm/census.hpp"
#include "sgm/cost_volume.hpp"
#include "sgm/evaluation.hpp"
#include "sgm/image_io.hpp"
#include "sgm/worker_pool.hpp"

namespace sgm::cli {

namespace {

// Input data that decodes but cannot be used (e.g. mismatched sizes).
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

void require_same_shape(const GrayImage& a, const GrayImage& b, const char* what)
{
	if (!a.same_shape(b)) {
		throw InputError(std::string(what) + ": image sizes differ (" + std::to_string(a.width()) + "x" +
		                 std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
		                 std::to_string(b.height()) + ")");
	}
}

} // namespace

PipelineOptions PipelineConfig::to_options() const
{
	PipelineOptions opt;
	opt.params.disparities = disparities;
	opt.params.p1 = p1;
	opt.params.p2 = p2;
	opt.params.paths = path_set_from_count(paths);
	opt.params.validate();
	opt.median = median;
	opt.fuse_last_path = fuse_last_path;
	if (threshold < 0) {
		throw std::invalid_argument("threshold must be >= 0");
	}
	if (bench_iters < 0) {
		throw std::invalid_argument("bench iterations must be >= 0");
	}
	return opt;
}

std::optional<int> parse_args(int argc, const char* const* argv, PipelineConfig& config, std::ostream& out,
                              std::ostream& err)
{
	CLI::App app{"Semi-global matching stereo disparity estimation"};
	app.add_option("--left", config.left, "Left (base) image, binary PGM")->required();
	app.add_option("--right", config.right, "Right (match) image, binary PGM")->required();
	app.add_option("--output", config.output, "Disparity map output, 8-bit PGM")->required();
	app.add_option("--disparities,-D", config.disparities, "Disparity levels D (1..256)")->capture_default_str();
	app.add_option("--paths", config.paths, "Aggregation directions: 2, 4 or 8")->capture_default_str();
	app.add_option("--p1", config.p1, "Small disparity change penalty")->capture_default_str();
	app.add_option("--p2", config.p2, "Discontinuity penalty (P1 < P2 <= 224)")->capture_default_str();
	bool no_median = false;
	app.add_flag("--no-median", no_median, "Skip the 3x3 median post-filter");
	app.add_option("--gt", config.gt, "Ground-truth disparity PGM; enables the metrics CSV");
	app.add_option("--mask", config.mask, "Evaluation mask PGM (nonzero = evaluate)");
	app.add_option("--threshold", config.threshold, "Bad-pixel threshold in pixels")->capture_default_str();
	app.add_option("--bench", config.bench_iters, "Benchmark iterations (0 = off)")->capture_default_str();
	app.add_option("--threads", config.threads, "Worker threads (default: all hardware threads)");
	app.add_option("--dump-cost", config.dump_cost, "Write the raw matching-cost cube here");
	app.add_flag("--fuse-last-path", config.fuse_last_path, "Fuse the last direction with disparity selection");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kOk;
	} catch (const CLI::ParseError& e) {
		err << "sgm_stereo: " << e.what() << "\n";
		return kConfigError;
	}
	config.median = !no_median;
	return std::nullopt;
}

int run(const PipelineConfig& config, std::ostream& out, std::ostream& err)
{
	PipelineOptions options;
	try {
		options = config.to_options();
	} catch (const std::invalid_argument& e) {
		err << "sgm_stereo: invalid configuration: " << e.what() << "\n";
		return kConfigError;
	}

	try {
		const GrayImage left = load_pgm_file(config.left);
		const GrayImage right = load_pgm_file(config.right);
		require_same_shape(left, right, "left/right");

		std::optional<DisparityMap> gt;
		std::optional<EvalMask> mask;
		if (config.gt) {
			gt = load_disparity_file(*config.gt);
			if (!gt->same_shape(left)) {
				throw InputError("ground truth size differs from the input images");
			}
		}
		if (config.mask) {
			mask = load_pgm_file(*config.mask);
			if (!mask->same_shape(left)) {
				throw InputError("mask size differs from the input images");
			}
		}

		const unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
		WorkerPool pool(threads);

		if (config.dump_cost) {
			const CostVolume mc = matching_cost(census_transform(left, &pool), census_transform(right, &pool),
			                                    options.params.disparities, &pool);
			write_file(*config.dump_cost, serialize_cost_volume(mc));
		}

		DisparityMap result = compute_disparity(left, right, options, &pool);
		if (config.bench_iters > 0) {
			StageTimes accumulated;
			const auto bench_start = std::chrono::steady_clock::now();
			for (int i = 0; i < config.bench_iters; ++i) {
				StageTimes t;
				DisparityMap again = compute_disparity(left, right, options, &pool, &t);
				accumulated += t;
				if (again != result) {
					err << "sgm_stereo: benchmark run produced a different disparity map\n";
					return kInternalError;
				}
			}
			const double wall_ms =
			    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - bench_start).count();
			err << "image " << left.width() << "x" << left.height() << ", D=" << options.params.disparities
			    << ", paths=" << config.paths << ", threads=" << pool.size() << "\n";
			err << format_timing_report(accumulated, config.bench_iters, wall_ms, options);
		}

		save_disparity_file(config.output, result);

		if (gt) {
			EvalResult eval;
			try {
				eval = bad_pixel_rate(result, *gt, mask ? &*mask : nullptr, config.threshold);
			} catch (const std::invalid_argument& e) {
				throw InputError(e.what());
			}
			out << metrics_csv_line(left.width(), left.height(), options.params, eval) << "\n";
		}
	} catch (const PgmError& e) {
		err << "sgm_stereo: " << e.what() << "\n";
		return kIoError;
	} catch (const InputError& e) {
		err << "sgm_stereo: " << e.what() << "\n";
		return kIoError;
	} catch (const std::exception& e) {
		err << "sgm_stereo: internal error: " << e.what() << "\n";
		return kInternalError;
	}
	return kOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	PipelineConfig config;
	if (auto code = parse_args(argc, argv, config, out, err)) {
		return *code;
	}
	return run(config, out, err);
}

} // namespace sgm::cli
