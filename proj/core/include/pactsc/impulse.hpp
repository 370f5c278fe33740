#pragma once

#include <vector>

namespace pactsc {

// Gaussian-enveloped cosine wavelet sampled on [-4*sigma_t, +4*sigma_t],
// peak-normalized to 1 at the time origin. sigma_t is chosen so the
// -6 dB spectral width equals bw_frac * f0.
struct ImpulseResponse {
  std::vector<double> waveform;
  int center_index = 0;  // sample index of t = 0
  double f0 = 0.0;
  double bw_frac = 0.0;
  double sample_rate = 0.0;

  // Full temporal support in seconds.
  double duration() const { return waveform.empty() ? 0.0 : (waveform.size() - 1) / sample_rate; }
};

ImpulseResponse make_impulse_response(double f0, double bw_frac, double sample_rate);

}  // namespace pactsc
