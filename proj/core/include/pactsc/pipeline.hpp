#pragma once

#include "pactsc/config.hpp"
#include "pactsc/das.hpp"
#include "pactsc/delay_line.hpp"
#include "pactsc/demux.hpp"
#include "pactsc/image.hpp"
#include "pactsc/nn_model.hpp"
#include "pactsc/phantom.hpp"

namespace pactsc {

enum class ReconMethod { kDas, kNn, kDasComposite };

const char* recon_method_name(ReconMethod method);
ReconMethod recon_method_from_name(const std::string& s);

// Zero-pads (or truncates) each composite to the requested length.
CompositeSignals pad_composites(const CompositeSignals& composites, int samples);

// Full signal chain of the simulated instrument: per-sensor traces ->
// 4 composites -> delay-line mux into one record -> demux -> image by
// the chosen method (the network, or delay-and-sum straight on the four
// composites). kDas is not available here: it needs all per-sensor
// channels, which the single-record chain deliberately gives up.
Image end_to_end(const Phantom& phantom, const SimConfig& config, const DelaySchedule& schedule,
                 ReconMethod method, ReconModel* model = nullptr);

// The composite signals as the reconstruction stage sees them: mux then
// demux with the default window, padded back to samples_per_channel.
CompositeSignals through_delay_line(const CompositeSignals& composites,
                                    const DelaySchedule& schedule, int samples_per_channel);

}  // namespace pactsc
