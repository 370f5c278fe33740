#include "pactsc/forward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pactsc/impulse.hpp"

namespace pactsc {

namespace {

struct SourcePixel {
  double x, y, amplitude;
};

// Central-difference time derivative of the impulse response, peak
// normalized to 1. One sample wider than h on each side.
std::vector<double> derivative_wavelet(const ImpulseResponse& h, int* center_index) {
  const int n = static_cast<int>(h.waveform.size());
  std::vector<double> w(n + 2, 0.0);
  auto sample = [&](int k) { return (k >= 0 && k < n) ? h.waveform[k] : 0.0; };
  for (int k = 0; k < n + 2; ++k) w[k] = (sample(k) - sample(k - 2)) / 2.0;
  double peak = 0.0;
  for (double v : w) peak = std::max(peak, std::abs(v));
  if (peak > 0)
    for (double& v : w) v /= peak;
  *center_index = h.center_index + 1;
  return w;
}

}  // namespace

MultiChannelSignal simulate_channels(const Phantom& phantom, const RingGeometry& geometry,
                                     const SimConfig& config) {
  config.validate();
  if (geometry.size() != config.n_sensors)
    throw std::invalid_argument("simulate_channels: geometry does not match config.n_sensors");
  const double half = config.roi_side / 2.0;
  for (const Disc& d : phantom.discs) {
    if (std::abs(d.center_x) + d.radius > half || std::abs(d.center_y) + d.radius > half)
      throw std::invalid_argument("simulate_channels: disc extends outside the ROI");
  }

  MultiChannelSignal out(config.n_sensors, config.samples_per_channel, config.sample_rate);

  const Image raster = rasterize_phantom(phantom, config);
  std::vector<SourcePixel> sources;
  for (int iy = 0; iy < raster.side; ++iy)
    for (int ix = 0; ix < raster.side; ++ix)
      if (raster.at(ix, iy) != 0.0)
        sources.push_back({pixel_center(ix, raster.side, config.roi_side),
                           pixel_center(iy, raster.side, config.roi_side), raster.at(ix, iy)});
  if (sources.empty()) return out;

  const ImpulseResponse h =
      make_impulse_response(config.center_freq, config.fractional_bandwidth, config.sample_rate);
  int wavelet_center = 0;
  const std::vector<double> wavelet = derivative_wavelet(h, &wavelet_center);
  const int wavelet_len = static_cast<int>(wavelet.size());

  const double pitch = config.pixel_pitch();
  const int n_samples = config.samples_per_channel;

  for (int j = 0; j < config.n_sensors; ++j) {
    const double sx = geometry.positions[j][0];
    const double sy = geometry.positions[j][1];
    double* trace = out.row(j);
    for (const SourcePixel& p : sources) {
      const double dx = p.x - sx;
      const double dy = p.y - sy;
      const double r = std::sqrt(dx * dx + dy * dy);
      const double amp = kSignalScale * p.amplitude / std::sqrt(std::max(r, pitch));
      // Continuous sample position of the wavelet origin.
      const double pos = (r / config.sound_speed - out.t0) * config.sample_rate;
      const double start = pos - wavelet_center;
      const double base = std::floor(start);
      const double frac = start - base;
      const int ibase = static_cast<int>(base);
      for (int k = 0; k < wavelet_len; ++k) {
        const double v = amp * wavelet[k];
        const int t0i = ibase + k;
        if (t0i >= 0 && t0i < n_samples) trace[t0i] += v * (1.0 - frac);
        if (t0i + 1 >= 0 && t0i + 1 < n_samples) trace[t0i + 1] += v * frac;
      }
    }
  }
  return out;
}

}  // namespace pactsc
