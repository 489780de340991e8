#ifndef SGM_IMAGE_IO_HPP
#define SGM_IMAGE_IO_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgm/image.hpp"

namespace sgm {

class PgmError : public std::runtime_error {
public:
	enum class Kind {
		BadMagic,
		MalformedHeader,
		UnsupportedMaxval,
		Truncated,
		Range,
		Io,
	};

	PgmError(Kind kind, const std::string& what)
		: std::runtime_error(what), kind_(kind) {}

	Kind kind() const noexcept { return kind_; }

private:
	Kind kind_;
};

/// Parses a binary (P5) PGM with maxval <= 255. Header comments are skipped.
GrayImage load_pgm(std::span<const std::byte> bytes);

std::vector<std::byte> save_pgm(const GrayImage& image);

/// Encodes each disparity directly as one 8-bit PGM sample. Throws
/// PgmError(Range) when a value exceeds 255.
std::vector<std::byte> save_disparity(const DisparityMap& map);

/// Reads an 8-bit PGM as a disparity map (ground truth uses the same
/// identity encoding as save_disparity).
DisparityMap load_disparity(std::span<const std::byte> bytes);

std::vector<std::byte> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::byte> bytes);

inline GrayImage load_pgm_file(const std::filesystem::path& path)
{
	return load_pgm(read_file(path));
}

inline void save_pgm_file(const std::filesystem::path& path, const GrayImage& image)
{
	write_file(path, save_pgm(image));
}

inline void save_disparity_file(const std::filesystem::path& path, const DisparityMap& map)
{
	write_file(path, save_disparity(map));
}

inline DisparityMap load_disparity_file(const std::filesystem::path& path)
{
	return load_disparity(read_file(path));
}

} // namespace sgm

#endif
