#pragma once

#include <filesystem>
#include <vector>

namespace pactsc {

// Square image over the region of interest. Pixel (0, 0) covers the ROI
// corner at (-roi_side/2, -roi_side/2); storage is row-major with x
// fastest, so index = iy * side + ix.
struct Image {
  int side = 0;
  std::vector<double> pixels;

  Image() = default;
  explicit Image(int side_) : side(side_), pixels(static_cast<std::size_t>(side_) * side_, 0.0) {}

  double& at(int ix, int iy) { return pixels[static_cast<std::size_t>(iy) * side + ix]; }
  double at(int ix, int iy) const { return pixels[static_cast<std::size_t>(iy) * side + ix]; }

  double max_value() const;
};

// Pixel-center coordinate of column ix (same formula for rows) for an
// ROI of width roi_side.
inline double pixel_center(int i, int side, double roi_side) {
  return -roi_side / 2.0 + (i + 0.5) * (roi_side / side);
}

// 8-bit binary portable graymap, max-normalized (all-zero image stays
// black). For quick visual inspection only.
void write_pgm(const Image& image, const std::filesystem::path& path);

}  // namespace pactsc
