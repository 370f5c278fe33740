#pragma once

#include "pactsc/config.hpp"
#include "pactsc/geometry.hpp"
#include "pactsc/image.hpp"
#include "pactsc/signal.hpp"

namespace pactsc {

struct DasOptions {
  bool clamp_negative = true;  // zero out negative pixel sums
  bool normalize = true;       // scale so the maximum pixel equals 1 (when > 0)
};

// Delay-and-sum backprojection over the full ring: each pixel accumulates,
// channel by channel in ascending order, the trace value at the pixel's
// time of flight (linear interpolation between samples, zero outside the
// recorded window).
Image das_reconstruct(const MultiChannelSignal& signals, const RingGeometry& geometry,
                      const SimConfig& config, const DasOptions& options = {});

// Delay-and-sum applied directly to the four composite signals, each
// attributed to its group's center sensor. Deliberately loses the per-
// sensor timing information, so images degrade; kept as the comparison
// baseline that motivates demultiplexing before reconstruction.
Image das_on_composites(const CompositeSignals& composites, const RingGeometry& geometry,
                        const SimConfig& config, const DasOptions& options = {});

}  // namespace pactsc
