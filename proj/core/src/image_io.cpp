#include "sgm/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

namespace sgm {

namespace {

class HeaderReader {
public:
	explicit HeaderReader(std::span<const std::byte> bytes) : bytes_(bytes) {}

	// Skips whitespace and '#' comments (which run to end of line).
	void skip_separators()
	{
		while (pos_ < bytes_.size()) {
			const auto c = static_cast<unsigned char>(bytes_[pos_]);
			if (c == '#') {
				while (pos_ < bytes_.size() && static_cast<char>(bytes_[pos_]) != '\n') {
					++pos_;
				}
			} else if (std::isspace(c)) {
				++pos_;
			} else {
				break;
			}
		}
	}

	long read_number(const char* field)
	{
		skip_separators();
		const auto begin = pos_;
		long value = 0;
		while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
			value = value * 10 + (static_cast<char>(bytes_[pos_]) - '0');
			if (value > 1'000'000'000L) {
				throw PgmError(PgmError::Kind::MalformedHeader, std::string("pgm: ") + field + " out of range");
			}
			++pos_;
		}
		if (pos_ == begin) {
			throw PgmError(PgmError::Kind::MalformedHeader, std::string("pgm: missing ") + field);
		}
		return value;
	}

	// Exactly one whitespace byte separates maxval from the raster.
	void consume_raster_separator()
	{
		if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
			throw PgmError(PgmError::Kind::MalformedHeader, "pgm: missing separator before raster");
		}
		++pos_;
	}

	std::size_t position() const noexcept { return pos_; }

private:
	std::span<const std::byte> bytes_;
	std::size_t pos_ = 0;
};

std::vector<std::byte> encode(int width, int height, std::span<const std::uint8_t> samples)
{
	const std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
	std::vector<std::byte> out;
	out.reserve(header.size() + samples.size());
	for (char c : header) {
		out.push_back(static_cast<std::byte>(c));
	}
	for (std::uint8_t s : samples) {
		out.push_back(static_cast<std::byte>(s));
	}
	return out;
}

} // namespace

GrayImage load_pgm(std::span<const std::byte> bytes)
{
	if (bytes.size() < 2 || static_cast<char>(bytes[0]) != 'P') {
		throw PgmError(PgmError::Kind::BadMagic, "pgm: unsupported magic");
	}
	if (static_cast<char>(bytes[1]) != '5') {
		throw PgmError(PgmError::Kind::BadMagic,
		               std::string("pgm: unsupported magic P") + static_cast<char>(bytes[1]));
	}

	HeaderReader reader(bytes.subspan(2));
	const long width = reader.read_number("width");
	const long height = reader.read_number("height");
	const long maxval = reader.read_number("maxval");
	if (width < 1 || height < 1) {
		throw PgmError(PgmError::Kind::MalformedHeader, "pgm: dimensions must be positive");
	}
	if (maxval < 1 || maxval > 255) {
		throw PgmError(PgmError::Kind::UnsupportedMaxval,
		               "pgm: unsupported maxval " + std::to_string(maxval));
	}
	reader.consume_raster_separator();

	const std::size_t offset = 2 + reader.position();
	const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
	if (bytes.size() - offset < count) {
		throw PgmError(PgmError::Kind::Truncated,
		               "pgm: truncated pixel data (expected " + std::to_string(count) + " bytes, got " +
		                   std::to_string(bytes.size() - offset) + ")");
	}

	std::vector<std::uint8_t> pixels(count);
	std::transform(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
	               bytes.begin() + static_cast<std::ptrdiff_t>(offset + count), pixels.begin(),
	               [](std::byte b) { return static_cast<std::uint8_t>(b); });
	return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::byte> save_pgm(const GrayImage& image)
{
	return encode(image.width(), image.height(), image.pixels());
}

std::vector<std::byte> save_disparity(const DisparityMap& map)
{
	std::vector<std::uint8_t> samples(map.size());
	const auto values = map.pixels();
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (values[i] > 255) {
			throw PgmError(PgmError::Kind::Range,
			               "disparity " + std::to_string(values[i]) + " exceeds 8-bit range");
		}
		samples[i] = static_cast<std::uint8_t>(values[i]);
	}
	return encode(map.width(), map.height(), samples);
}

DisparityMap load_disparity(std::span<const std::byte> bytes)
{
	const GrayImage gray = load_pgm(bytes);
	const auto src = gray.pixels();
	std::vector<std::uint16_t> values(src.begin(), src.end());
	return DisparityMap(gray.width(), gray.height(), std::move(values));
}

std::vector<std::byte> read_file(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw PgmError(PgmError::Kind::Io, "cannot open " + path.string());
	}
	std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
	std::vector<std::byte> bytes(raw.size());
	std::transform(raw.begin(), raw.end(), bytes.begin(), [](char c) { return static_cast<std::byte>(c); });
	return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::byte> bytes)
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) {
		throw PgmError(PgmError::Kind::Io, "cannot create " + path.string());
	}
	out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
	if (!out) {
		throw PgmError(PgmError::Kind::Io, "write failed for " + path.string());
	}
}

} // namespace sgm
