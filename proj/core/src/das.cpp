#include "pactsc/das.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "das_internal.hpp"

namespace pactsc {
namespace {

// Shared backprojection: one (position, trace) pair per contributing
// element, summed per pixel in the order given.
Image backproject(const std::vector<std::array<double, 2>>& positions,
                  const std::vector<const double*>& traces, int samples, double sample_rate,
                  double t0, const SimConfig& config, const DasOptions& options) {
  Image image(config.grid_size);
  detail::backproject_window(positions, traces, samples, sample_rate, t0, config, 0,
                             config.grid_size - 1, 0, config.grid_size - 1, image.pixels.data());
  if (options.clamp_negative)
    for (double& v : image.pixels) v = std::max(v, 0.0);
  if (options.normalize) {
    const double peak = image.max_value();
    if (peak > 0.0)
      for (double& v : image.pixels) v /= peak;
  }
  return image;
}

}  // namespace

Image das_reconstruct(const MultiChannelSignal& signals, const RingGeometry& geometry,
                      const SimConfig& config, const DasOptions& options) {
  config.validate();
  if (static_cast<int>(geometry.size()) != signals.channels)
    throw std::invalid_argument("das_reconstruct: geometry size does not match channel count");
  if (signals.samples < 1) throw std::invalid_argument("das_reconstruct: empty signal");

  std::vector<std::array<double, 2>> positions(geometry.positions.begin(),
                                               geometry.positions.end());
  std::vector<const double*> traces(positions.size());
  for (std::size_t j = 0; j < traces.size(); ++j) traces[j] = signals.row(static_cast<int>(j));
  return backproject(positions, traces, signals.samples, signals.sample_rate, signals.t0, config,
                     options);
}

Image das_on_composites(const CompositeSignals& composites, const RingGeometry& geometry,
                        const SimConfig& config, const DasOptions& options) {
  config.validate();
  if (composites.groups < 1) throw std::invalid_argument("das_on_composites: no composites");
  if (composites.samples < 1) throw std::invalid_argument("das_on_composites: empty signal");
  const int group_size = composites.group_size > 0 ? composites.group_size : config.group_size;

  std::vector<std::array<double, 2>> positions;
  std::vector<const double*> traces;
  for (int g = 0; g < composites.groups; ++g) {
    const int center = g * group_size + group_size / 2;
    if (center >= static_cast<int>(geometry.size()))
      throw std::invalid_argument("das_on_composites: group center outside geometry");
    positions.push_back(geometry.positions[center]);
    traces.push_back(composites.row(g));
  }
  return backproject(positions, traces, composites.samples, composites.sample_rate, 0.0, config,
                     options);
}

}  // namespace pactsc
