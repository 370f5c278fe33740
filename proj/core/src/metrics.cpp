#include "pactsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "das_internal.hpp"
#include "pactsc/forward.hpp"
#include "pactsc/geometry.hpp"

namespace pactsc {

std::array<int, 2> argmax_pixel(const Image& image) {
  int best_ix = 0, best_iy = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < image.side; ++iy)
    for (int ix = 0; ix < image.side; ++ix)
      if (image.at(ix, iy) > best) {
        best = image.at(ix, iy);
        best_ix = ix;
        best_iy = iy;
      }
  return {best_ix, best_iy};
}

std::array<double, 2> intensity_centroid(const Image& image) {
  double wsum = 0.0, xsum = 0.0, ysum = 0.0;
  for (int iy = 0; iy < image.side; ++iy)
    for (int ix = 0; ix < image.side; ++ix) {
      const double w = std::max(image.at(ix, iy), 0.0);
      wsum += w;
      xsum += w * ix;
      ysum += w * iy;
    }
  if (wsum <= 0.0) {
    const double center = (image.side - 1) / 2.0;
    return {center, center};
  }
  return {xsum / wsum, ysum / wsum};
}

std::array<double, 2> to_pixel_coords(double x, double y, const SimConfig& config) {
  const double pitch = config.pixel_pitch();
  return {(x + config.roi_side / 2.0) / pitch - 0.5, (y + config.roi_side / 2.0) / pitch - 0.5};
}

double disc_localization_error(const Image& image, const Disc& disc, const SimConfig& config) {
  config.validate();
  if (image.side != config.grid_size)
    throw std::invalid_argument("disc_localization_error: image does not match config grid");

  const auto [cx, cy] = to_pixel_coords(disc.center_x, disc.center_y, config);
  const double radius_px = disc.radius / config.pixel_pitch();
  const int tcx = static_cast<int>(std::lround(cx));
  const int tcy = static_cast<int>(std::lround(cy));
  const int half = static_cast<int>(std::ceil(radius_px)) + kLocalizationTemplatePad;

  // Predicted signed pattern of this disc alone, on the window around it.
  Phantom single;
  single.discs.push_back(disc);
  const RingGeometry geometry = build_ring_geometry(config.n_sensors, config.ring_radius);
  const MultiChannelSignal predicted = simulate_channels(single, geometry, config);

  const int x0 = std::max(0, tcx - half);
  const int x1 = std::min(config.grid_size - 1, tcx + half);
  const int y0 = std::max(0, tcy - half);
  const int y1 = std::min(config.grid_size - 1, tcy + half);
  const int tw = x1 - x0 + 1;
  const int th = y1 - y0 + 1;
  std::vector<double> tpl(static_cast<std::size_t>(tw) * th);
  {
    std::vector<std::array<double, 2>> positions(geometry.positions.begin(),
                                                 geometry.positions.end());
    std::vector<const double*> traces(positions.size());
    for (std::size_t j = 0; j < traces.size(); ++j)
      traces[j] = predicted.row(static_cast<int>(j));
    detail::backproject_window(positions, traces, predicted.samples, predicted.sample_rate,
                               predicted.t0, config, x0, x1, y0, y1, tpl.data());
  }

  // Normalized cross-correlation over integer shifts of the window.
  constexpr int kSearch = kLocalizationSearchRadius;
  constexpr int kSpan = 2 * kSearch + 1;
  std::array<double, kSpan * kSpan> ncc;
  ncc.fill(-2.0);
  double best = -2.0;
  int best_sx = 0, best_sy = 0;
  for (int sy = -kSearch; sy <= kSearch; ++sy)
    for (int sx = -kSearch; sx <= kSearch; ++sx) {
      double ii = 0.0, tt = 0.0, it = 0.0;
      int valid = 0;
      for (int ty = 0; ty < th; ++ty)
        for (int tx = 0; tx < tw; ++tx) {
          const int ix = x0 + tx + sx;
          const int iy = y0 + ty + sy;
          if (ix < 0 || iy < 0 || ix >= image.side || iy >= image.side) continue;
          const double a = image.at(ix, iy);
          const double b = tpl[static_cast<std::size_t>(ty) * tw + tx];
          ii += a * a;
          tt += b * b;
          it += a * b;
          ++valid;
        }
      if (valid < tw * th / 2 || ii <= 0.0 || tt <= 0.0) continue;
      const double value = it / std::sqrt(ii * tt);
      ncc[static_cast<std::size_t>(sy + kSearch) * kSpan + (sx + kSearch)] = value;
      if (value > best) {
        best = value;
        best_sx = sx;
        best_sy = sy;
      }
    }
  if (best <= -2.0) return std::numeric_limits<double>::infinity();

  // Parabolic sub-pixel refinement along each axis of the shift lattice.
  const auto ncc_at = [&](int sx, int sy) {
    return ncc[static_cast<std::size_t>(sy + kSearch) * kSpan + (sx + kSearch)];
  };
  double fx = 0.0, fy = 0.0;
  if (best_sx > -kSearch && best_sx < kSearch) {
    const double l = ncc_at(best_sx - 1, best_sy);
    const double c = ncc_at(best_sx, best_sy);
    const double r = ncc_at(best_sx + 1, best_sy);
    const double den = l - 2.0 * c + r;
    if (den < 0.0) fx = std::clamp(0.5 * (l - r) / den, -0.5, 0.5);
  }
  if (best_sy > -kSearch && best_sy < kSearch) {
    const double l = ncc_at(best_sx, best_sy - 1);
    const double c = ncc_at(best_sx, best_sy);
    const double r = ncc_at(best_sx, best_sy + 1);
    const double den = l - 2.0 * c + r;
    if (den < 0.0) fy = std::clamp(0.5 * (l - r) / den, -0.5, 0.5);
  }

  const double ex = (tcx + best_sx + fx) - cx;
  const double ey = (tcy + best_sy + fy) - cy;
  return std::sqrt(ex * ex + ey * ey);
}

double worst_disc_error(const Image& image, const Phantom& phantom, const SimConfig& config) {
  double worst = 0.0;
  for (const Disc& disc : phantom.discs)
    worst = std::max(worst, disc_localization_error(image, disc, config));
  return worst;
}

}  // namespace pactsc
