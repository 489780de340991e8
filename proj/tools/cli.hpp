#ifndef SGM_TOOLS_CLI_HPP
#define SGM_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgm/pipeline.hpp"

namespace sgm::cli {

enum ExitCode : int {
	kOk = 0,
	kIoError = 1,
	kConfigError = 2,
	kInternalError = 3,
};

struct PipelineConfig {
	std::filesystem::path left;
	std::filesystem::path right;
	std::filesystem::path output;
	int disparities = 128;
	int paths = 4;
	int p1 = 7;
	int p2 = 84;
	bool median = true;
	std::optional<std::filesystem::path> gt;
	std::optional<std::filesystem::path> mask;
	std::optional<std::filesystem::path> dump_cost;
	int threshold = 3;
	int bench_iters = 0;
	unsigned threads = 0; // 0 = available parallelism
	bool fuse_last_path = false;

	/// Throws std::invalid_argument on any violated invariant.
	PipelineOptions to_options() const;
};

/// Parses argv into a config. Returns an exit code when parsing ends the run
/// (help requested or a bad flag); messages go to out/err.
std::optional<int> parse_args(int argc, const char* const* argv, PipelineConfig& config, std::ostream& out,
                              std::ostream& err);

/// Runs the pipeline described by config: writes the disparity PGM, prints
/// the metrics CSV line to out when ground truth is given and the timing
/// report to err when benchmarking. Returns an ExitCode.
int run(const PipelineConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sgm::cli

#endif
