#include "pactsc/bench.hpp"

#include <chrono>

#include "pactsc/das.hpp"
#include "pactsc/demux.hpp"
#include "pactsc/forward.hpp"
#include "pactsc/frontend.hpp"
#include "pactsc/geometry.hpp"
#include "pactsc/phantom.hpp"
#include "pactsc/pipeline.hpp"

namespace pactsc {
namespace {

template <typename F>
double time_call(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

KvDoc BenchReport::to_kv() const {
  KvDoc doc;
  doc.set_double("bench.record_duration_us", record_duration_s * 1e6);
  doc.set_double("bench.modeled_scan_s", modeled_scan_s);
  doc.set_double("bench.laser_period_s", laser_period_s);
  doc.set_double("bench.simulate_s", simulate_s);
  doc.set_double("bench.mux_s", mux_s);
  doc.set_double("bench.demux_s", demux_s);
  doc.set_double("bench.das_s", das_s);
  if (nn_infer_s) doc.set_double("bench.nn_infer_s", *nn_infer_s);
  doc.set("reference.note",
          "published hardware timings, shown for context only, never asserted");
  doc.set("reference.proposed_acquisition", "2.35ms");
  doc.set("reference.proposed_processing", "28ms");
  doc.set("reference.conventional_acquisition", "261.6s");
  doc.set("reference.conventional_processing", "159ms");
  return doc;
}

BenchReport run_bench(const SimConfig& config, const DelaySchedule& schedule, ReconModel* model,
                      double laser_period_s, std::uint64_t seed) {
  config.validate();
  schedule.validate();

  BenchReport report;
  report.laser_period_s = laser_period_s;
  report.record_duration_s =
      schedule.delays[3] + config.samples_per_channel / config.sample_rate;
  report.modeled_scan_s = config.n_sensors * laser_period_s;

  const Phantom phantom = sample_random_phantom(seed, config);
  const RingGeometry geometry = build_ring_geometry(config.n_sensors, config.ring_radius);

  MultiChannelSignal signals;
  report.simulate_s = time_call([&] { signals = simulate_channels(phantom, geometry, config); });

  const CompositeSignals composites = superimpose(signals, config.group_size);
  CombinedRecord record;
  report.mux_s = time_call([&] { record = mux(composites, schedule); });

  DemuxResult recovered;
  const std::int64_t window =
      default_window_len(schedule, config.sample_rate, config.samples_per_channel);
  report.demux_s = time_call([&] { recovered = demux(record, window); });

  report.das_s = time_call([&] { das_reconstruct(signals, geometry, config); });

  if (model != nullptr) {
    CompositeSignals padded = pad_composites(recovered.composites, config.samples_per_channel);
    model->infer(padded);  // warm-up outside the timed call
    report.nn_infer_s = time_call([&] { model->infer(padded); });
  }
  return report;
}

}  // namespace pactsc
