#pragma once

#include <cstddef>
#include <vector>

namespace pactsc {

// S x T matrix of sampled pressure traces, row-major (one row per
// channel). t0 is the time of the first sample; 0 marks the laser pulse.
struct MultiChannelSignal {
  int channels = 0;
  int samples = 0;
  double sample_rate = 0.0;
  double t0 = 0.0;
  std::vector<double> data;

  MultiChannelSignal() = default;
  MultiChannelSignal(int channels_, int samples_, double sample_rate_)
      : channels(channels_),
        samples(samples_),
        sample_rate(sample_rate_),
        data(static_cast<std::size_t>(channels_) * samples_, 0.0) {}

  double* row(int ch) { return data.data() + static_cast<std::size_t>(ch) * samples; }
  const double* row(int ch) const { return data.data() + static_cast<std::size_t>(ch) * samples; }
  double& at(int ch, int t) { return row(ch)[t]; }
  double at(int ch, int t) const { return row(ch)[t]; }
};

// G x T matrix of superimposed group signals (G = n_sensors / group_size).
struct CompositeSignals {
  int groups = 0;
  int samples = 0;
  double sample_rate = 0.0;
  int group_size = 0;
  std::vector<double> data;

  CompositeSignals() = default;
  CompositeSignals(int groups_, int samples_, double sample_rate_, int group_size_)
      : groups(groups_),
        samples(samples_),
        sample_rate(sample_rate_),
        group_size(group_size_),
        data(static_cast<std::size_t>(groups_) * samples_, 0.0) {}

  double* row(int g) { return data.data() + static_cast<std::size_t>(g) * samples; }
  const double* row(int g) const { return data.data() + static_cast<std::size_t>(g) * samples; }
  double& at(int g, int t) { return row(g)[t]; }
  double at(int g, int t) const { return row(g)[t]; }
};

}  // namespace pactsc
