#pragma once

#include <array>

#include "pactsc/config.hpp"
#include "pactsc/image.hpp"
#include "pactsc/phantom.hpp"

namespace pactsc {

// Pixel (ix, iy) of the largest value; first occurrence in row-major
// order on ties.
std::array<int, 2> argmax_pixel(const Image& image);

// Intensity-weighted centroid in pixel units, treating negative values
// as zero weight. Falls back to the image center when there is no
// positive energy.
std::array<double, 2> intensity_centroid(const Image& image);

// Continuous pixel coordinates of an ROI point (the center of pixel i
// maps to coordinate i).
std::array<double, 2> to_pixel_coords(double x, double y, const SimConfig& config);

// Template half-extent beyond the disc radius and the shift search radius
// used by disc_localization_error, in pixels.
inline constexpr int kLocalizationTemplatePad = 6;
inline constexpr int kLocalizationSearchRadius = 3;

// Localization error, in pixels, of one disc in a signed delay-and-sum
// image (reconstructed with clamping disabled; normalization is
// irrelevant because the match is scale-invariant).
//
// The reconstruction of a disc at this grid resolution is a rim-centered
// oscillation whose carrier sits at the grid's Nyquist rate, so plain
// peak or centroid readouts are dominated by speckle. Instead the
// expected signed pattern of the disc alone is predicted with the forward
// model at the disc's exact sub-pixel position, and the image is matched
// against it by normalized cross-correlation over integer shifts up to
// kLocalizationSearchRadius, with parabolic sub-pixel refinement of the
// best shift. Returns the distance between the matched position and the
// true center; +infinity when no valid shift exists (degenerate window).
//
// Preconditions: image.side == config.grid_size; the disc lies fully
// inside the ROI.
double disc_localization_error(const Image& image, const Disc& disc, const SimConfig& config);

// Largest disc_localization_error over a phantom's discs (0 for an empty
// phantom).
double worst_disc_error(const Image& image, const Phantom& phantom, const SimConfig& config);

}  // namespace pactsc
