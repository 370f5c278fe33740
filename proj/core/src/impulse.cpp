#include "pactsc/impulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pactsc {

ImpulseResponse make_impulse_response(double f0, double bw_frac, double sample_rate) {
  if (!(f0 > 0) || !(sample_rate > 0))
    throw std::invalid_argument("make_impulse_response: f0 and sample_rate must be > 0");
  if (f0 >= sample_rate / 2.0)
    throw std::invalid_argument("make_impulse_response: f0 must be below Nyquist");
  if (!(bw_frac > 0) || !(bw_frac < 2))
    throw std::invalid_argument("make_impulse_response: bw_frac must be in (0, 2)");

  // -6 dB width of the Gaussian spectrum equals bw_frac * f0 with this
  // time constant.
  const double sigma_t =
      2.0 * std::sqrt(2.0 * std::numbers::ln2) / (2.0 * std::numbers::pi * bw_frac * f0);
  const double dt = 1.0 / sample_rate;
  const int half = static_cast<int>(std::ceil(4.0 * sigma_t / dt));

  ImpulseResponse h;
  h.center_index = half;
  h.f0 = f0;
  h.bw_frac = bw_frac;
  h.sample_rate = sample_rate;
  h.waveform.resize(2 * half + 1);
  for (int k = -half; k <= half; ++k) {
    const double t = k * dt;
    h.waveform[k + half] =
        std::exp(-t * t / (2.0 * sigma_t * sigma_t)) * std::cos(2.0 * std::numbers::pi * f0 * t);
  }
  return h;
}

}  // namespace pactsc
