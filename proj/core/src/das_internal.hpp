#pragma once

// Internal backprojection core shared by the reconstruction entry points and
// the localization metric's template builder. Not installed.

#include <array>
#include <cmath>
#include <vector>

#include "pactsc/config.hpp"
#include "pactsc/geometry.hpp"

namespace pactsc::detail {

// Delay-and-sum over the pixel window [x0..x1] x [y0..y1] (inclusive, grid
// indices). `out` receives (x1-x0+1)*(y1-y0+1) signed sums, row-major with x
// fastest, exactly matching the full-grid reconstruction on that window.
inline void backproject_window(const std::vector<std::array<double, 2>>& positions,
                               const std::vector<const double*>& traces, int samples,
                               double sample_rate, double t0, const SimConfig& config, int x0,
                               int x1, int y0, int y1, double* out) {
  const double inv_c = 1.0 / config.sound_speed;
  const int width = x1 - x0 + 1;
  for (int iy = y0; iy <= y1; ++iy) {
    const double py = pixel_center(iy, config.grid_size, config.roi_side);
    for (int ix = x0; ix <= x1; ++ix) {
      const double px = pixel_center(ix, config.grid_size, config.roi_side);
      double sum = 0.0;
      for (std::size_t j = 0; j < positions.size(); ++j) {
        const double dx = px - positions[j][0];
        const double dy = py - positions[j][1];
        const double tof = std::sqrt(dx * dx + dy * dy) * inv_c;
        const double idx = (tof - t0) * sample_rate;
        if (idx < 0.0 || idx > samples - 1) continue;
        const auto i0 = static_cast<int>(idx);
        const double frac = idx - i0;
        const double* s = traces[j];
        sum += frac == 0.0 ? s[i0] : (1.0 - frac) * s[i0] + frac * s[i0 + 1];
      }
      out[(iy - y0) * width + (ix - x0)] = sum;
    }
  }
}

}  // namespace pactsc::detail
