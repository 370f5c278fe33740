#pragma once

#include "pactsc/config.hpp"
#include "pactsc/geometry.hpp"
#include "pactsc/phantom.hpp"
#include "pactsc/signal.hpp"

namespace pactsc {

// Amplitude convention of the simulated traces: the bipolar per-pixel
// wavelet (time derivative of the impulse response) is peak-normalized
// and multiplied by this constant, so a typical 4-disc phantom at the
// default configuration produces traces with RMS of order 1.
inline constexpr double kSignalScale = 0.15;

// Ray-sum forward model: every nonzero pixel of the rasterized phantom
// emits the derivative wavelet, delayed by distance/sound_speed with
// two-tap sub-sample placement and attenuated by 1/sqrt(max(r, pitch)).
// Deterministic: pixels are accumulated in row-major order per sensor.
MultiChannelSignal simulate_channels(const Phantom& phantom, const RingGeometry& geometry,
                                     const SimConfig& config);

}  // namespace pactsc
