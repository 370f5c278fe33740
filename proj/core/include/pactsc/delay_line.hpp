#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pactsc/kvtext.hpp"
#include "pactsc/signal.hpp"

namespace pactsc {

// Four-input delay-line schedule. Input 1 reaches the adder undelayed;
// inputs 2-4 pass through delay units that also produce echoes: echo e
// of input k arrives at (2e+1) times its delay with amplitude
// echo_coeff^e. echo_coeff = 0 models the ideal line.
struct DelaySchedule {
  std::array<double, 4> delays{0.0, 0.0, 0.0, 0.0};  // s, delays[0] == 0
  std::array<double, 4> gains{1.0, 1.0, 1.0, 1.0};
  double echo_coeff = 0.0;  // rho in [0, 1)
  int n_echoes = 0;         // echoes modeled per delayed input

  // Set when built from the T/b delay-period table.
  std::optional<double> table_T;
  std::optional<double> table_b;

  // Sub-sample residual of each delay after quantization, filled by mux.
  std::array<double, 4> quantization_residual{0.0, 0.0, 0.0, 0.0};

  // First-echo arrival of input k (k >= 1); 3x the unit delay.
  double echo_time(int k) const { return 3.0 * delays[k]; }

  // Delay of each input in integer samples (round to nearest).
  std::array<std::int64_t, 4> offsets(double sample_rate) const;

  void validate() const;

  KvDoc to_kv() const;  // times serialized in microseconds
  static DelaySchedule from_kv(const KvDoc& doc);
};

// delays = [0, 1.5T+b, 2.5T+b, 3.5T+b]; first echoes land at
// [4.5T+3b, 7.5T+3b, 10.5T+3b] = 3x the delays. Requires T > 0, b >= 0.
DelaySchedule schedule_from_table1(double T, double b, double echo_coeff = 0.0);

// The fixed hardware schedule: 0, 50, 100, 150 microseconds, unit gains,
// no echoes. Not expressible as a T/b table entry with b >= 0.
DelaySchedule paper_schedule();

struct AliasReport {
  struct Overlap {
    std::string first;
    std::string second;
    double seconds = 0.0;  // overlap length
  };
  bool alias_free = true;
  std::vector<Overlap> overlapping_pairs;
};

// Checks that the four delayed signal windows of the given duration,
// plus every modeled echo window when echo_coeff > 0, are pairwise
// disjoint in time. Windows that merely touch do not alias.
AliasReport check_alias_free(const DelaySchedule& schedule, double signal_duration);

// Single-channel record produced by the delay-line adder.
struct CombinedRecord {
  std::vector<double> data;
  double sample_rate = 0.0;
  int source_group_size = 0;
  std::optional<DelaySchedule> schedule;
};

// Delays, scales and sums the four composites (plus echo copies when
// echo_coeff > 0) into one record. Delays are quantized to integer
// samples; the residuals are recorded in the returned schedule.
CombinedRecord mux(const CompositeSignals& composites, const DelaySchedule& schedule);

}  // namespace pactsc
