#ifndef SGM_SYNTHETIC_HPP
#define SGM_SYNTHETIC_HPP

#include <cstdint>

#include "sgm/image.hpp"

namespace sgm {

/// Deterministic textured test image: random intensities lightly blurred so
/// neighbouring pixels correlate. Same seed, same image on every platform.
GrayImage make_textured_image(int width, int height, std::uint64_t seed);

/// Uniform horizontal shift: right(x, y) = left(x + shift, y). Columns whose
/// source falls off the right edge get fresh texture from `seed`. With left as
/// the base image, the true disparity is `shift` everywhere it is observable.
GrayImage make_shifted_view(const GrayImage& left, int shift, std::uint64_t seed);

} // namespace sgm

#endif
