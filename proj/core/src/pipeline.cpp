#include "pactsc/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "pactsc/forward.hpp"
#include "pactsc/frontend.hpp"
#include "pactsc/geometry.hpp"

namespace pactsc {

const char* recon_method_name(ReconMethod method) {
  switch (method) {
    case ReconMethod::kDas: return "das";
    case ReconMethod::kNn: return "nn";
    case ReconMethod::kDasComposite: return "das-composite";
  }
  return "unknown";
}

ReconMethod recon_method_from_name(const std::string& s) {
  if (s == "das") return ReconMethod::kDas;
  if (s == "nn") return ReconMethod::kNn;
  if (s == "das-composite") return ReconMethod::kDasComposite;
  throw std::invalid_argument("unknown reconstruction method '" + s +
                              "' (expected das, nn, or das-composite)");
}

CompositeSignals pad_composites(const CompositeSignals& composites, int samples) {
  if (samples < 1) throw std::invalid_argument("pad_composites: samples must be >= 1");
  CompositeSignals out(composites.groups, samples, composites.sample_rate, composites.group_size);
  const int keep = std::min(samples, composites.samples);
  for (int g = 0; g < composites.groups; ++g)
    std::copy_n(composites.row(g), keep, out.row(g));
  return out;
}

CompositeSignals through_delay_line(const CompositeSignals& composites,
                                    const DelaySchedule& schedule, int samples_per_channel) {
  const CombinedRecord record = mux(composites, schedule);
  const std::int64_t window =
      default_window_len(schedule, composites.sample_rate, samples_per_channel);
  const DemuxResult recovered = demux(record, window);
  return pad_composites(recovered.composites, samples_per_channel);
}

Image end_to_end(const Phantom& phantom, const SimConfig& config, const DelaySchedule& schedule,
                 ReconMethod method, ReconModel* model) {
  config.validate();
  const RingGeometry geometry = build_ring_geometry(config.n_sensors, config.ring_radius);
  const MultiChannelSignal signals = simulate_channels(phantom, geometry, config);
  const CompositeSignals composites = superimpose(signals, config.group_size);
  const CompositeSignals recovered =
      through_delay_line(composites, schedule, config.samples_per_channel);

  switch (method) {
    case ReconMethod::kDasComposite:
      return das_on_composites(recovered, geometry, config);
    case ReconMethod::kNn:
      if (model == nullptr) throw std::invalid_argument("end_to_end: nn method needs a model");
      return model->infer(recovered);
    case ReconMethod::kDas:
      throw std::invalid_argument(
          "end_to_end: das needs per-sensor channels; the combined-record chain only recovers "
          "the 4 composites (use das-composite or nn)");
  }
  throw std::invalid_argument("end_to_end: unknown method");
}

}  // namespace pactsc
