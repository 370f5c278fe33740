#pragma once

#include <optional>

#include "pactsc/config.hpp"
#include "pactsc/delay_line.hpp"
#include "pactsc/kvtext.hpp"
#include "pactsc/nn_model.hpp"

namespace pactsc {

// Timing summary of the simulated instrument and of this machine's
// processing stages. The published hardware timings it is modeled after
// are echoed as reference strings only; nothing asserts against them.
struct BenchReport {
  // Derived from configuration, not measured.
  double record_duration_s = 0.0;  // last delay + one window
  double modeled_scan_s = 0.0;     // n_sensors x laser period (rotary scan stand-in)
  double laser_period_s = 0.0;

  // Wall-clock seconds measured on this machine.
  double simulate_s = 0.0;
  double mux_s = 0.0;
  double demux_s = 0.0;
  double das_s = 0.0;
  std::optional<double> nn_infer_s;  // set when a model is supplied

  KvDoc to_kv() const;
};

// Runs one phantom through every stage and times them. laser_period_s
// models the per-position wait of a mechanically scanned single sensor
// (10 Hz repetition by default).
BenchReport run_bench(const SimConfig& config, const DelaySchedule& schedule, ReconModel* model,
                      double laser_period_s = 0.1, std::uint64_t seed = 1);

}  // namespace pactsc
