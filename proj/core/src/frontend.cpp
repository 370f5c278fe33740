#include "pactsc/frontend.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pactsc/rng.hpp"

namespace pactsc {

CompositeSignals superimpose(const MultiChannelSignal& signals, int group_size,
                             std::span<const double> gains) {
  if (group_size <= 0) throw std::invalid_argument("superimpose: group_size must be > 0");
  if (signals.channels % group_size != 0)
    throw std::invalid_argument("superimpose: channel count " + std::to_string(signals.channels) +
                                " is not divisible by group_size " + std::to_string(group_size));
  if (!gains.empty() && static_cast<int>(gains.size()) != signals.channels)
    throw std::invalid_argument("superimpose: gains must have one entry per channel");

  const int groups = signals.channels / group_size;
  CompositeSignals out(groups, signals.samples, signals.sample_rate, group_size);
  for (int g = 0; g < groups; ++g) {
    double* dst = out.row(g);
    for (int i = g * group_size; i < (g + 1) * group_size; ++i) {
      const double gain = gains.empty() ? 1.0 : gains[i];
      const double* src = signals.row(i);
      for (int t = 0; t < signals.samples; ++t) dst[t] += gain * src[t];
    }
  }
  return out;
}

std::vector<double> add_noise(std::span<const double> data, double snr_db, std::uint64_t seed) {
  std::vector<double> out(data.begin(), data.end());
  if (snr_db == std::numeric_limits<double>::infinity()) return out;
  if (!std::isfinite(snr_db)) throw std::invalid_argument("add_noise: snr_db must be finite or +inf");

  double power = 0.0;
  for (double v : data) power += v * v;
  power /= data.empty() ? 1.0 : static_cast<double>(data.size());
  if (power == 0.0)
    throw std::invalid_argument("add_noise: signal power is zero, SNR undefined");

  const double noise_sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0));
  Rng rng(seed);
  for (double& v : out) v += noise_sigma * rng.gaussian();
  return out;
}

MultiChannelSignal add_noise(const MultiChannelSignal& signals, double snr_db, std::uint64_t seed) {
  MultiChannelSignal out = signals;
  out.data = add_noise(std::span<const double>(signals.data), snr_db, seed);
  return out;
}

CompositeSignals add_noise(const CompositeSignals& signals, double snr_db, std::uint64_t seed) {
  CompositeSignals out = signals;
  out.data = add_noise(std::span<const double>(signals.data), snr_db, seed);
  return out;
}

}  // namespace pactsc
